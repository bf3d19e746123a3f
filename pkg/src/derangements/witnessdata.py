"""Loader and template expansion for the shipped witness catalog."""

from __future__ import annotations

import os
from importlib import resources

from .classcount import ClassLabel, WitnessRecord, sigma_orbits
from .numth import ppd_set_int


class WitnessDataError(ValueError):
    pass


def load_witnesses(filename="witnesses.txt"):
    override = os.environ.get("DERANGE_DATA_DIR")
    if override:
        with open(os.path.join(override, filename)) as fh:
            text = fh.read()
    else:
        text = resources.files("derangements.data").joinpath(filename).read_text()
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("|")
        if len(parts) != 9:
            raise WitnessDataError(f"line {lineno}: expected 9 fields")
        case, family, inst, subgroup, predicate, params, element, action, note = parts
        instance = None
        if inst != "-":
            n, q = inst.split(":")
            instance = (int(n), int(q))
        pt = []
        if params:
            for piece in params.split(","):
                k, v = piece.split("=")
                pt.append((k, int(v)))
        records.append(WitnessRecord(case, family, subgroup, predicate,
                                     tuple(pt), element, action, instance,
                                     note))
    return records


def expand_element(template: str, family: str, n: int, q: int) -> ClassLabel:
    """Instantiate an element template at concrete parameters."""
    if template.startswith("unip:"):
        sizes = [int(x) for x in template[5:].split(",")]
        total = sum(sizes)
        if total > n:
            raise WitnessDataError(f"partition {sizes} exceeds dimension {n}")
        sizes.extend([1] * (n - total))
        return ClassLabel.unipotent(sizes)
    if template.startswith("semi:"):
        opts = dict(piece.split("=") if "=" in piece else (piece, "1")
                    for piece in template[5:].split(","))
        i = _eval_in_n(opts["i"], n)
        mult = int(opts.get("m", 1))
        e = int(opts.get("e", 0))
        ppds = ppd_set_int(q, i)
        if not ppds:
            raise WitnessDataError(f"no primitive prime divisor of {q}^{i}-1")
        r = max(ppds)
        step = q * q if family == "U" else q
        orbits = sigma_orbits(r, step)
        if "pair" in opts:
            orb = next(o for o in orbits if o.inverse() != o)
            return ClassLabel.semisimple([(orb, mult), (orb.inverse(), mult)], e=e)
        if "two" in opts:
            return ClassLabel.semisimple([(orbits[0], 1), (orbits[1], 1)], e=e)
        return ClassLabel.semisimple([(orbits[0], mult)], e=e)
    raise WitnessDataError(f"bad element template {template!r}")


def _eval_in_n(expr, n):
    if expr.isdigit():
        return int(expr)
    return int(eval(expr, {"__builtins__": {}}, {"n": n}))  # data-file expressions
