"""Text and JSON rendering of calculator values."""

from __future__ import annotations

from ..basis import AbgCoords, DirectSum, to_abg
from ..core import J3, J3Class, modulus
from ..equations import Family, SolutionKind, SolutionSet
from ..transcend import CylCoords, PolarForm

DEFAULT_PRECISION = 12


def fmt_real(x: float, precision: int = DEFAULT_PRECISION) -> str:
    s = f"{x:.{precision}g}"
    return "0" if s == "-0" else s


def fmt_j3(s: J3, precision: int = DEFAULT_PRECISION) -> str:
    """``u + vj + wjj`` with components below the display precision
    (relative to ``|s|``) shown as zero.  The output is valid input."""
    floor = modulus(s) * 10.0 ** (-precision)
    u, v, w = (0.0 if abs(x) < floor else x for x in s)
    out = fmt_real(u, precision)
    for x, suffix in ((v, "j"), (w, "jj")):
        sign = "-" if x < 0 else "+"
        out += f" {sign} {fmt_real(abs(x), precision)}{suffix}"
    return out


def fmt_cyl(c: CylCoords, precision: int = DEFAULT_PRECISION) -> str:
    return f"r = {fmt_real(c.r, precision)}, theta = {fmt_real(c.theta, precision)}, a = {fmt_real(c.a, precision)}"


def fmt_dsum(d: DirectSum, precision: int = DEFAULT_PRECISION) -> str:
    sign = "-" if d.zy < 0 else "+"
    return f"({fmt_real(d.r, precision)}, {fmt_real(d.zx, precision)} {sign} {fmt_real(abs(d.zy), precision)}i)"


def fmt_solutions(sol: SolutionSet, precision: int = DEFAULT_PRECISION) -> str:
    p = precision
    if sol.kind is SolutionKind.EMPTY:
        lines = ["no solutions"]
    elif sol.kind in (SolutionKind.UNIQUE, SolutionKind.FINITE):
        n = len(sol.values)
        lines = [f"{n} solution{'s' if n != 1 else ''}:"]
        lines += [f"  {fmt_j3(x, p)}" for x in sol.values]
    else:
        lines = [f"infinitely many solutions ({sol.kind.value}):"]
        names = ("t", "s")
        for fam in sol.families:
            terms = [fmt_j3(fam.base, p)]
            terms += [f"{names[i]}*({fmt_j3(d, p)})" for i, d in enumerate(fam.directions)]
            lines.append("  " + " + ".join(terms))
    return "\n".join(lines)


def fmt_polar(pf: PolarForm, precision: int = DEFAULT_PRECISION) -> str:
    return "\n".join(
        [
            f"p = {fmt_j3(pf.p, precision)}",
            f"u = {fmt_j3(pf.u_dir, precision)}",
            fmt_cyl(pf.cyl, precision),
        ]
    )


def fmt_value(x, precision: int = DEFAULT_PRECISION) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not calculator values")
    if isinstance(x, (int, float)):
        return fmt_real(float(x), precision)
    if isinstance(x, J3):
        return fmt_j3(x, precision)
    if isinstance(x, J3Class):
        return x.value
    if isinstance(x, CylCoords):
        return fmt_cyl(x, precision)
    if isinstance(x, DirectSum):
        return fmt_dsum(x, precision)
    if isinstance(x, SolutionSet):
        return fmt_solutions(x, precision)
    if isinstance(x, PolarForm):
        return fmt_polar(x, precision)
    if isinstance(x, AbgCoords):
        return f"abg({fmt_real(x.a, precision)}, {fmt_real(x.b, precision)}, {fmt_real(x.c, precision)})"
    raise TypeError(f"cannot render {type(x).__name__}")


# -- JSON ---------------------------------------------------------------------


def _j3_json(s: J3) -> dict:
    return {"type": "j3", "u": s.u, "v": s.v, "w": s.w}


def to_json(x) -> dict:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return {"type": "real", "value": float(x)}
    if isinstance(x, J3):
        return _j3_json(x)
    if isinstance(x, AbgCoords):
        return {"type": "abg", "a": x.a, "b": x.b, "c": x.c}
    if isinstance(x, J3Class):
        return {"type": "class", "value": x.value}
    if isinstance(x, CylCoords):
        return {"type": "cyl", "r": x.r, "theta": x.theta, "a": x.a}
    if isinstance(x, DirectSum):
        return {"type": "dsum", "r": x.r, "x": x.zx, "y": x.zy}
    if isinstance(x, SolutionSet):
        return {
            "type": "solutions",
            "kind": x.kind.value,
            "values": [_j3_json(v) for v in x.values],
            "families": [
                {"base": _j3_json(f.base), "directions": [_j3_json(d) for d in f.directions]}
                for f in x.families
            ],
        }
    if isinstance(x, PolarForm):
        return {
            "type": "polar",
            "p": _j3_json(x.p),
            "u": _j3_json(x.u_dir),
            "cyl": to_json(x.cyl),
            "abg": to_json(to_abg(x.p)),
        }
    raise TypeError(f"cannot serialise {type(x).__name__}")


def from_json(obj: dict):
    """Inverse of :func:`to_json`."""
    t = obj["type"]
    if t == "real":
        return float(obj["value"])
    if t == "j3":
        return J3(obj["u"], obj["v"], obj["w"])
    if t == "abg":
        return AbgCoords(obj["a"], obj["b"], obj["c"])
    if t == "class":
        return J3Class(obj["value"])
    if t == "cyl":
        return CylCoords(obj["r"], obj["theta"], obj["a"])
    if t == "dsum":
        return DirectSum(obj["r"], obj["x"], obj["y"])
    if t == "solutions":
        return SolutionSet(
            SolutionKind(obj["kind"]),
            tuple(from_json(v) for v in obj["values"]),
            tuple(
                Family(from_json(f["base"]), tuple(from_json(d) for d in f["directions"]))
                for f in obj["families"]
            ),
        )
    if t == "polar":
        return PolarForm(from_json(obj["p"]), from_json(obj["u"]), from_json(obj["cyl"]))
    raise ValueError(f"unknown value type {t!r}")


def error_json(err: Exception) -> dict:
    body = {"code": getattr(err, "code", "error"), "message": str(err)}
    column = getattr(err, "column", None)
    if column is not None:
        body["column"] = column
    return {"error": body}

