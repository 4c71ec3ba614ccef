"""Canonical JSON exports of operator matrices and polynomial tables."""

from __future__ import annotations

import json

from .fockrep import EXACT, e_operator, f_operator, psi_eigenvalue
from .partitions import Partition, partitions_of, partitions_upto
from .shufflealg import k_element, shuffle_operator
from .symfun import macdonald_table
from .theta import c_norm

KINDS = ("e-matrix", "f-matrix", "psi", "k-matrix", "macdonald", "c-norms")


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def e_matrix(r: int, n: int, fld=EXACT) -> dict:
    """e_r from size n to size n+1."""
    op = e_operator(r, n, fld).restrict([n])
    return {"kind": "e-matrix", "r": r, "n": n, **op.to_json(fld)}


def f_matrix(r: int, n: int, fld=EXACT) -> dict:
    """f_r from size n to size n-1."""
    if n < 1:
        raise ValueError("f-matrix needs n >= 1")
    op = f_operator(r, n, fld).restrict([n])
    return {"kind": "f-matrix", "r": r, "n": n, **op.to_json(fld)}


def psi_table(max_size: int, order: int, fld=EXACT) -> dict:
    """psi+ and psi- coefficients 0..order on every [lam] with |lam| <= max_size."""
    values = {}
    for lam in partitions_upto(max_size):
        values[lam.to_text()] = {
            sign: [fld.to_string(c) for c in psi_eigenvalue(lam, sign, order, fld).coeffs] for sign in ("+", "-")
        }
    return {"kind": "psi", "max_size": max_size, "order": order, "values": values}


def k_matrix(n: int, max_size: int, fld=EXACT) -> dict:
    """K_n in the fixed-point basis, on targets of size <= max_size."""
    op = shuffle_operator(k_element(n), max_size, fld)
    return {"kind": "k-matrix", "n": n, "max_size": max_size, **op.to_json(fld)}


def macdonald_entry(lam, basis: str = "m", fld=None) -> dict:
    """P_lam expanded in one of the m, p, e bases."""
    lam = Partition(lam)
    qt = (fld or EXACT).qt_field()
    table = macdonald_table(lam.size, qt)
    f = table.symfun(lam)
    if basis != "m":
        f = f.to(basis, table)
    coeffs = {mu.to_text(): qt.to_string(c) for mu, c in sorted(f.coeffs.items(), key=lambda kv: _key(kv[0])) if c != 0}
    return {"partition": list(lam), "basis": basis, "coeffs": coeffs}


def macdonald_dump(degree: int, basis: str = "m", fld=None) -> dict:
    return {
        "kind": "macdonald",
        "degree": degree,
        "polynomials": [macdonald_entry(lam, basis, fld) for n in range(degree + 1) for lam in partitions_of(n)],
    }


def c_norms(max_size: int, fld=EXACT) -> dict:
    return {
        "kind": "c-norms",
        "max_size": max_size,
        "values": {lam.to_text(): fld.to_string(c_norm(lam, fld)) for lam in partitions_upto(max_size)},
    }


def _key(p: Partition):
    return (p.size, tuple(-x for x in p))


def build(kind: str, params: dict, fld=EXACT) -> dict:
    """The JSON object for one dump kind.

    params: r, n for the e/f matrices; n, max_size for k-matrix;
    max_size, order for psi; degree, basis for macdonald; max_size for c-norms.
    """
    if kind == "e-matrix":
        return e_matrix(params["r"], params["n"], fld)
    if kind == "f-matrix":
        return f_matrix(params["r"], params["n"], fld)
    if kind == "psi":
        return psi_table(params["max_size"], params.get("order", 8), fld)
    if kind == "k-matrix":
        return k_matrix(params["n"], params["max_size"], fld)
    if kind == "macdonald":
        return macdonald_dump(params["degree"], params.get("basis", "m"), fld)
    if kind == "c-norms":
        return c_norms(params["max_size"], fld)
    raise ValueError(f"unknown dump kind {kind!r}; expected one of {', '.join(KINDS)}")


def dump(kind: str, params: dict, path=None, fld=EXACT) -> str:
    """Serialize one dump kind; write it to path when given and return the text."""
    text = canonical_json(build(kind, params, fld))
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
