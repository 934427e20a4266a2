"""Spectra of the braid arrangements A_2..A_4 and of d lines in the plane, with their checks."""

from milnorfibre.arrangement import dense_edges_braid, dense_edges_rank2
from milnorfibre.braid import chi_u_sym
from milnorfibre.hodge import (golden_hd_braid, golden_spectrum_a4, hd_contraction, purity_symmetry_check,
                               spectrum_from_pd, theta_hd_from_spectrum, zeta_check)
from milnorfibre.rank2 import pd_rank2_monodromy, spectrum_rank2
from milnorfibre.reps import specialize


def report(label, sp, pd, ell, chi, edges):
    purity = purity_symmetry_check(sp, ell, edges)
    zeta = zeta_check(specialize(pd, u=1, v=1), chi)
    back = theta_hd_from_spectrum(sp, ell, pd.group.n) == hd_contraction(pd)
    print(f"{label}: {sp}")
    print(f"    terms {len(sp)}, total {sp.total()}, chi(U) {chi}, "
          f"purity {'ok' if purity.passed else 'FAILED'} ({purity.notes[0]}), "
          f"zeta {'ok' if zeta.passed else 'FAILED'}, round trip {'ok' if back else 'FAILED'}")
    return purity.passed and zeta.passed and back


def main():
    ok = True
    for n in (2, 3, 4):
        pd = golden_hd_braid(n)
        ok &= report(f"A_{n}", spectrum_from_pd(pd, n), pd, n, chi_u_sym(n), dense_edges_braid(n))
    print("A_4 matches the tabulated spectrum:", spectrum_from_pd(golden_hd_braid(4), 4) == golden_spectrum_a4())
    for d in range(3, 13):
        ok &= report(f"{d} lines", spectrum_rank2(d), pd_rank2_monodromy(d), 2, 2 - d, dense_edges_rank2(d))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
