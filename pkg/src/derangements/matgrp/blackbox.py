"""Loader for shipped black-box permutation generator data (sporadic and
cameo groups that have no convenient matrix construction here)."""

from __future__ import annotations

import os
from importlib import resources


class DataFileError(ValueError):
    pass


def _data_text(filename):
    override = os.environ.get("DERANGE_DATA_DIR")
    if override:
        with open(os.path.join(override, filename)) as fh:
            return fh.read()
    return resources.files("derangements.data").joinpath(filename).read_text()


def load_perm_groups(filename="permgroups.txt"):
    """Parse the generator data file into {name: (degree, order, gens)}."""
    out = {}
    name = None
    degree = order = None
    gens: list[tuple] = []

    def flush(lineno):
        if name is None:
            return
        if not gens:
            raise DataFileError(f"line {lineno}: group {name} has no generators")
        out[name] = (degree, order, list(gens))

    for lineno, raw in enumerate(_data_text(filename).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "group":
            flush(lineno)
            if len(parts) != 6 or parts[2] != "degree" or parts[4] != "order":
                raise DataFileError(f"line {lineno}: malformed group header")
            name = parts[1]
            degree = int(parts[3])
            order = int(parts[5])
            gens = []
        elif parts[0] == "gen":
            images = tuple(int(x) for x in parts[1].split(","))
            if sorted(images) != list(range(degree)):
                raise DataFileError(f"line {lineno}: not a permutation of 0..{degree - 1}")
            gens.append(images)
        else:
            raise DataFileError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    flush("eof")
    return out


def perm_group(name):
    """Generators and declared order of a named shipped permutation group,
    with the order verified by a stabilizer chain."""
    groups = load_perm_groups()
    if name not in groups:
        raise KeyError(f"unknown group {name!r}; shipped: {sorted(groups)}")
    degree, order, gens = groups[name]
    from ..permgrp.core import BSGS

    chain = BSGS(gens, degree)
    if chain.order != order:
        raise DataFileError(f"group {name}: chain order {chain.order} != declared {order}")
    return gens, order
