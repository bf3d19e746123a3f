"""Conjugacy classes of prime-order elements and derangement verdicts.

Classes are materialized exactly, as hash sets of packed permutations,
closed under conjugation by the generators.  Completeness of the list of
classes of a given order is certified either by an exact element count from
a full enumeration of the group (feasible up to 10^7 elements) or, above
that, by sampling saturation: discovery stops only after 3|G|/m consecutive
random elements of the right order landed in known classes, m the smallest
class size found.  Emitted classes are always exact; only the completeness
certificate degrades, and that is recorded on the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..numth import factor
from .core import (BSGS, DEFAULT_SEED, ProductReplacer, bsgs, evaluate_word,
                   fixed_points, identity_perm, is_identity, is_transitive,
                   perm_order, perm_power, pinv, pmul)


class GroupTooLarge(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotNormal(ValueError):
    pass


class NotTransitive(ValueError):
    pass


MAX_ORDER_FULL = 5 * 10**7
EXACT_COUNT_LIMIT = 10**7
_CHUNK = 1 << 18


def _dtype(degree):
    return np.uint8 if degree <= 255 else np.uint16


def _np_perm(p, degree):
    return np.array(p, dtype=_dtype(degree))


def _compose_rows(rows, g_arr):
    """Rowwise (row then g): out[i, x] = g[row[i, x]]."""
    return g_arr[rows]


def _conjugate_rows(rows, g_arr, ginv_arr):
    """Rowwise g^-1 * row * g."""
    return g_arr[rows[:, ginv_arr]]


def _batch_power(rows, k):
    """Rowwise k-th power of permutations."""
    n = rows.shape[1]
    result = np.tile(np.arange(n, dtype=rows.dtype), (rows.shape[0], 1))
    base = rows
    while k:
        if k & 1:
            result = np.take_along_axis(base, result, axis=1)
        k >>= 1
        if k:
            base = np.take_along_axis(base, base, axis=1)
    return result


def enumerate_group(gens, degree):
    """Full BFS enumeration; returns (set of packed elements, array)."""
    dt = _dtype(degree)
    gen_arrs = [np.array(g, dtype=dt) for g in gens]
    ident = np.arange(degree, dtype=dt)
    seen = {ident.tobytes()}
    rows = [ident]
    frontier = [ident]
    while frontier:
        batch = np.stack(frontier)
        frontier = []
        for g in gen_arrs:
            images = _compose_rows(batch, g)
            for row in images:
                b = row.tobytes()
                if b not in seen:
                    seen.add(b)
                    rows.append(row)
                    frontier.append(row)
    return seen, np.stack(rows)


def count_power_identity(arr, k):
    """Number of non-identity rows x with x^k = identity."""
    n = arr.shape[1]
    ident = np.arange(n, dtype=arr.dtype)
    count = 0
    for lo in range(0, arr.shape[0], _CHUNK):
        chunk = arr[lo:lo + _CHUNK]
        powered = _batch_power(chunk, k)
        count += int((powered == ident).all(axis=1).sum())
    return count - (1 if k >= 1 else 0)  # identity row always satisfies x^k = 1


def conjugation_class(rep, gen_arrs, ginv_arrs):
    """Exact closure of rep under conjugation; returns (members set, size)."""
    degree = len(rep)
    dt = _dtype(degree)
    start = np.array(rep, dtype=dt)
    members = {start.tobytes()}
    frontier = [start]
    while frontier:
        batch = np.stack(frontier)
        frontier = []
        for g, gi in zip(gen_arrs, ginv_arrs):
            images = _conjugate_rows(batch, g, gi)
            for row in images:
                b = row.tobytes()
                if b not in members:
                    members.add(b)
                    frontier.append(row)
    return members


@dataclass
class ClassRec:
    """A conjugacy class of prime-order elements, materialized exactly."""

    element_order: int
    representative: tuple
    rep_word: tuple
    class_size: int
    fixed_points: int
    coset: int = 0                      # 0 = inside the socle
    members: set = field(repr=False, default=None)
    label: str = ""

    def contains(self, p, degree):
        return np.array(p, dtype=_dtype(degree)).tobytes() in self.members


@dataclass
class SocleClassData:
    """Prime-order class data of a socle, reusable across extensions."""

    chain: BSGS
    classes: list
    exact: bool
    counts: dict | None
    elements: np.ndarray | None
    element_set: set | None


def _sample_prime_part(sampler, r):
    x = sampler.sample()
    o = perm_order(x)
    if o % r:
        return None
    return perm_power(x, o // r)


def prime_order_classes(chain: BSGS, seed: int = DEFAULT_SEED,
                        exact_limit: int = EXACT_COUNT_LIMIT,
                        sample_cap: int = 3 * 10**6) -> list[ClassRec]:
    """Complete, duplicate-free list of conjugacy classes of prime-order
    elements of the group behind `chain`, one ClassRec per class."""
    return socle_class_data(chain, seed=seed, exact_limit=exact_limit,
                            sample_cap=sample_cap).classes


def socle_class_data(chain: BSGS, seed: int = DEFAULT_SEED,
                     exact_limit: int = EXACT_COUNT_LIMIT,
                     sample_cap: int = 3 * 10**6,
                     keep_elements: bool = False) -> SocleClassData:
    order = chain.order
    if order > MAX_ORDER_FULL:
        raise GroupTooLarge(f"|G| = {order} exceeds {MAX_ORDER_FULL}")
    degree = chain.degree
    gens = chain.gens
    primes = sorted(factor(order).primes())
    dt = _dtype(degree)
    gen_arrs = [np.array(g, dtype=dt) for g in gens]
    ginv_arrs = [np.array(pinv(g), dtype=dt) for g in gens]

    exact = order <= exact_limit
    counts = None
    elements = None
    element_set = None
    if exact:
        element_set, elements = enumerate_group(gens, degree)
        assert len(element_set) == order, "enumeration disagrees with chain order"
        counts = {r: count_power_identity(elements, r) for r in primes}

    sampler = ProductReplacer(gens, seed)
    classes: list[ClassRec] = []
    for r in primes:
        found: list[ClassRec] = []
        covered = 0
        misses = 0
        samples = 0
        while True:
            if exact and covered == counts[r]:
                break
            if not exact and found:
                min_size = min(c.class_size for c in found)
                if misses >= (3 * order + min_size - 1) // min_size:
                    break
            samples += 1
            if samples > sample_cap:
                raise BudgetExceeded(
                    f"sampling cap hit for order {r}", partial=classes + found)
            y = _sample_prime_part(sampler, r)
            if y is None:
                continue
            b = np.array(y, dtype=dt).tobytes()
            if any(b in c.members for c in found):
                misses += 1
                continue
            members = conjugation_class(y, gen_arrs, ginv_arrs)
            rec = ClassRec(r, y, chain.factor_word(y), len(members),
                           fixed_points(y), members=members)
            found.append(rec)
            covered += rec.class_size
            misses = 0
            if exact:
                assert covered <= counts[r], "class sum exceeds exact count"
        found.sort(key=lambda c: (c.class_size, c.representative))
        for i, rec in enumerate(found):
            rec.label = f"{r}{chr(ord('a') + i)}" if i < 26 else f"{r}_{i}"
        classes.extend(found)
    return SocleClassData(chain, classes, exact, counts,
                          elements if keep_elements else None,
                          element_set if keep_elements else None)


@dataclass
class FusedClass:
    """A G-class of prime-order elements, a union of socle classes (or a
    single outer-coset class)."""

    element_order: int
    class_size: int
    fixed_points: int
    parts: tuple          # labels of the socle classes merged, or (label,)
    coset: int = 0
    rep_words: tuple = ()


def fuse_classes(classes, outer_perms, degree):
    """Merge socle classes that are conjugate under the given outer
    permutations (which must normalize the socle).  Returns FusedClass
    records; with no outer perms every class stays single."""
    parent = list(range(len(classes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for w in outer_perms:
        winv = pinv(w)
        for i, c in enumerate(classes):
            img = pmul(pmul(winv, c.representative), w)
            for j, d in enumerate(classes):
                if d.element_order == c.element_order and d.contains(img, degree):
                    a, bb = find(i), find(j)
                    if a != bb:
                        parent[a] = bb
                    break
            else:
                raise NotNormal("conjugate of a class representative escaped "
                                "the socle class list")
    groups: dict[int, list[int]] = {}
    for i in range(len(classes)):
        groups.setdefault(find(i), []).append(i)
    fused = []
    for idxs in groups.values():
        cs = [classes[i] for i in idxs]
        fps = {c.fixed_points for c in cs}
        assert len(fps) == 1, "fixed points not constant on fused class"
        fused.append(FusedClass(cs[0].element_order,
                                sum(c.class_size for c in cs),
                                cs[0].fixed_points,
                                tuple(c.label for c in cs),
                                coset=0,
                                rep_words=tuple(c.rep_word for c in cs)))
    fused.sort(key=lambda f: (f.element_order, f.class_size, f.parts))
    return fused


def class_fusion(big: BSGS, classes):
    """Spec-shaped wrapper: fuse socle classes under the generators of a
    bigger chain normalizing the socle."""
    return fuse_classes(classes, [tuple(g) for g in big.gens], big.degree)
