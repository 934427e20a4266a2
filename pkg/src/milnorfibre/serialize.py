"""Text and JSON forms of groups, labels, representation-ring elements and spectra.

Expression notation used by the data files::

    1*g0 + eps*g6 - 2 (3,1)*g2      pair labels over G x mu_m or Gamma_0
    2 g0 + g1 + g2                  characters of mu_N
    (3,1) + (2,2)                   characters of G alone

Partitions are written "(3,1)", with "1" and "eps" accepted for the
trivial and sign characters; dihedral characters are "1", "eps",
"delta", "eps.delta" and "chiK"; abstract linear characters "1", "eps",
"eps^i".
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError
from .groups import Abstract, Cyclic, Dihedral, Gamma0, Monomial, Product, Symmetric, is_pair_label, table
from .reps import GradedRep, RepElement
from .spectrum import Spectrum

# --------------------------------------------------------------------------
# groups


def group_to_str(g) -> str:
    if isinstance(g, Cyclic):
        return f"cyclic:{g.n}"
    if isinstance(g, Symmetric):
        return f"sym:{g.n}"
    if isinstance(g, Dihedral):
        return f"dihedral:{g.p}"
    if isinstance(g, Monomial):
        return f"monomial:{g.m},{g.p}"
    if isinstance(g, Abstract):
        return f"abstract:{g.name},{g.e}"
    if isinstance(g, Product):
        return f"product({group_to_str(g.g)};{g.n})"
    if isinstance(g, Gamma0):
        return f"gamma0({group_to_str(g.g)};{g.m};{g.e})"
    raise ParseError(f"cannot serialise group {g!r}")


def group_from_str(s: str):
    s = s.strip()
    m = re.fullmatch(r"(product|gamma0)\((.*)\)", s)
    if m:
        kind, inner = m.groups()
        parts = inner.rsplit(";", 2 if kind == "gamma0" else 1)
        try:
            base = group_from_str(parts[0])
            if kind == "product":
                return Product(base, int(parts[1]))
            return Gamma0(base, int(parts[1]), int(parts[2]))
        except (IndexError, ValueError) as exc:
            raise ParseError(f"bad group string {s!r}") from exc
    m = re.fullmatch(r"(cyclic|sym|dihedral|monomial|abstract):(.+)", s)
    if not m:
        raise ParseError(f"bad group string {s!r}")
    kind, arg = m.groups()
    try:
        if kind == "cyclic":
            return Cyclic(int(arg))
        if kind == "sym":
            return Symmetric(int(arg))
        if kind == "dihedral":
            return Dihedral(int(arg))
        if kind == "monomial":
            a, b = arg.split(",")
            return Monomial(int(a), int(b))
        name, e = arg.rsplit(",", 1)
        return Abstract(name, int(e))
    except ValueError as exc:
        raise ParseError(f"bad group string {s!r}") from exc


# --------------------------------------------------------------------------
# labels


def base_label_to_str(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def base_label_from_str(group, s: str):
    s = s.strip()
    if isinstance(group, Symmetric):
        if s == "1":
            return (group.n,)
        if s == "eps":
            return (1,) * group.n
        m = re.fullmatch(r"\((\d+(?:,\d+)*)\)", s)
        if not m:
            raise ParseError(f"bad partition label {s!r}")
        lam = tuple(int(x) for x in m.group(1).split(","))
        if sum(lam) != group.n or list(lam) != sorted(lam, reverse=True):
            raise ParseError(f"{s} is not a partition of {group.n}")
        return lam
    if isinstance(group, Abstract):
        m = re.fullmatch(r"1|eps(?:\^(\d+))?", s)
        if not m or int(m.group(1) or 1) >= group.e and s != "1":
            raise ParseError(f"{s!r} is not a linear character of {group}")
        return s
    if s not in table(group).labels:
        raise ParseError(f"{s!r} is not an irreducible of {group}")
    return s


def _base(group):
    return group.g if isinstance(group, (Product, Gamma0)) else group


# --------------------------------------------------------------------------
# expressions


def parse_expr(group, text: str) -> RepElement:
    """Parse the compact notation described in the module docstring."""
    text = text.strip()
    if text in ("", "0"):
        return RepElement(group, {})
    pair = isinstance(group, (Product, Gamma0))
    acc: dict = {}
    for raw in _split_terms(text):
        sign, body = raw
        # a coefficient needs trailing space, except before "g" in cyclic terms
        pat = r"(\d+)?\s*(g\d+)" if isinstance(group, Cyclic) else r"(?:(\d+)\s+)?(.*)"
        m = re.fullmatch(pat, body)
        if not m:
            raise ParseError(f"bad term {body!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        rest = m.group(2).strip()
        if isinstance(group, Cyclic):
            g = re.fullmatch(r"g(\d+)", rest)
            if not g:
                raise ParseError(f"bad cyclic term {body!r}")
            key = int(g.group(1))
        elif pair:
            g = re.fullmatch(r"(.+?)\s*\*\s*g(\d+)", rest)
            if not g:
                raise ParseError(f"bad pair term {body!r}")
            key = (base_label_from_str(_base(group), g.group(1)), int(g.group(2)))
        else:
            if not rest:
                raise ParseError(f"empty term in {text!r}")
            key = base_label_from_str(group, rest)
        acc[key] = acc.get(key, 0) + sign * coef
    return RepElement(group, acc)


def _split_terms(text: str) -> list[tuple[int, str]]:
    # split on + or - outside brackets; "lin[0,1]+" keeps its sign
    out, depth, cur, sign = [], 0, "", 1
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in "+-" and not cur.endswith("]"):
            if cur.strip():
                out.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
            continue
        cur += ch
    if cur.strip():
        out.append((sign, cur.strip()))
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    return out


def format_expr(x: RepElement) -> str:
    if not x:
        return "0"
    parts = []
    for lab, c in x.items():
        if isinstance(x.group, Cyclic):
            name = f"g{lab}"
        elif is_pair_label(lab):
            name = f"{base_label_to_str(lab[0])}*g{lab[1]}"
        else:
            name = base_label_to_str(lab)
        coef = f"{abs(c)} " if abs(c) != 1 else ""
        parts.append(("- " if c < 0 else "+ ") + coef + name)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[1:]


def _mono_key(s: str) -> tuple[int, int, int]:
    exps = {"u": 0, "v": 0, "t": 0}
    s = s.strip()
    if s in ("", "1"):
        return (0, 0, 0)
    for tok in s.split():
        m = re.fullmatch(r"([uvt])(?:\^(\d+))?", tok)
        if not m:
            raise ParseError(f"bad monomial {s!r}")
        exps[m.group(1)] += int(m.group(2) or 1)
    return (exps["u"], exps["v"], exps["t"])


def _mono_str(k: tuple[int, int, int]) -> str:
    out = []
    for var, e in zip("uvt", k):
        if e:
            out.append(var if e == 1 else f"{var}^{e}")
    return " ".join(out) or "1"


def parse_graded(group, terms: dict[str, str]) -> GradedRep:
    """Map monomial strings such as "u^2 v t^2" to expressions."""
    acc = {}
    for mono, expr in terms.items():
        k = _mono_key(mono)
        x = parse_expr(group, expr)
        acc[k] = acc[k] + x if k in acc else x
    return GradedRep(group, acc)


def format_graded_terms(a: GradedRep) -> dict[str, str]:
    return {_mono_str(k): format_expr(r) for k, r in a.items()}


_SPEC_TERM = re.compile(r"(\d*)\s*(?:t(?:\^(?:\((-?\d+)(?:/(\d+))?\)|(\d+)))?)?")


def parse_spectrum(text: str, d: int) -> Spectrum:
    """Read back the printed form, e.g. "t^(2/3) + 2t + t^(4/3)"."""
    text = text.strip()
    if text in ("", "0"):
        return Spectrum.build(d)
    acc: dict[Fraction, int] = {}
    for sign, body in _split_terms(text):
        m = _SPEC_TERM.fullmatch(body)
        if not m or not body:
            raise ParseError(f"bad spectrum term {body!r}")
        coef, num, den, whole = m.groups()
        if "t" not in body:
            a = Fraction(0)
            c = int(coef)
        else:
            if num:
                a = Fraction(int(num), int(den or 1))
            else:
                a = Fraction(int(whole) if whole else 1)
            c = int(coef) if coef else 1
        acc[a] = acc.get(a, 0) + sign * c
    try:
        return Spectrum.from_alphas(d, acc)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# --------------------------------------------------------------------------
# JSON records


def rep_to_json(x: RepElement) -> dict:
    out = []
    for lab, c in x.items():
        if isinstance(x.group, Cyclic):
            out.append({"gamma": lab, "mult": c})
        elif is_pair_label(lab):
            out.append({"rho": base_label_to_str(lab[0]), "gamma": lab[1], "mult": c})
        else:
            out.append({"rho": base_label_to_str(lab), "mult": c})
    return {"kind": "rep", "group": group_to_str(x.group), "terms": out}


def rep_from_json(data: dict) -> RepElement:
    group = group_from_str(data["group"])
    acc = {}
    for t in data["terms"]:
        if isinstance(group, Cyclic):
            key = t["gamma"]
        elif isinstance(group, (Product, Gamma0)):
            key = (base_label_from_str(group.g, t["rho"]), t["gamma"])
        else:
            key = base_label_from_str(group, t["rho"])
        acc[key] = acc.get(key, 0) + t["mult"]
    return RepElement(group, acc)


def graded_to_json(a: GradedRep) -> dict:
    terms = []
    for (u, v, t), r in a.items():
        for item in rep_to_json(r)["terms"]:
            terms.append({"u": u, "v": v, "t": t, **item})
    return {"kind": "graded", "group": group_to_str(a.group), "terms": terms}


def graded_from_json(data: dict) -> GradedRep:
    group = group_from_str(data["group"])
    buckets: dict = {}
    for t in data["terms"]:
        key = (t["u"], t["v"], t["t"])
        buckets.setdefault(key, []).append({k: t[k] for k in ("rho", "gamma", "mult") if k in t})
    return GradedRep(group, {
        k: rep_from_json({"group": data["group"], "terms": items}) for k, items in buckets.items()
    })


def spectrum_to_json(sp: Spectrum) -> dict:
    return {"kind": "spectrum", "d": sp.d,
            "terms": [{"num": n, "den": d, "mult": c} for n, d, c in sp.triples()]}


def spectrum_from_json(data: dict) -> Spectrum:
    alphas = {}
    for t in data["terms"]:
        a = Fraction(t["num"], t["den"])
        alphas[a] = alphas.get(a, 0) + t["mult"]
    return Spectrum.from_alphas(data["d"], alphas)


def to_json(obj) -> dict:
    if isinstance(obj, RepElement):
        return rep_to_json(obj)
    if isinstance(obj, GradedRep):
        return graded_to_json(obj)
    if isinstance(obj, Spectrum):
        return spectrum_to_json(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def from_json(data: dict):
    kind = data.get("kind")
    if kind == "rep":
        return rep_from_json(data)
    if kind == "graded":
        return graded_from_json(data)
    if kind == "spectrum":
        return spectrum_from_json(data)
    raise ParseError(f"unknown record kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), sort_keys=True)


def loads(text: str):
    return from_json(json.loads(text))
