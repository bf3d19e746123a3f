"""Elusive / almost-elusive verdicts for transitive permutation groups.

The verdict for G acting on Omega counts the conjugacy classes of
prime-order derangements of G.  Classes inside the socle are computed once
per socle (on a small faithful "work" action when Omega is large) and fused
under the outer generators; prime-order classes in the outer cosets are
enumerated separately.  Class representatives travel between actions as
generator words, so fixed-point counts on Omega never require materializing
classes there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..numth import factor
from .core import (BSGS, DEFAULT_SEED, ProductReplacer, bsgs, evaluate_word,
                   fixed_points, is_identity, is_transitive, perm_order,
                   perm_power, pinv, pmul)
from .classes import (EXACT_COUNT_LIMIT, BudgetExceeded, ClassRec, FusedClass,
                      NotNormal, NotTransitive, SocleClassData, _compose_rows,
                      _dtype, conjugation_class, count_power_identity,
                      fuse_classes, socle_class_data)


@dataclass
class GClassSummary:
    element_order: int
    class_size: int
    fixed_points: int
    coset: int
    parts: tuple


@dataclass
class Verdict:
    tag: str                      # "elusive" | "almost_elusive" | "neither"
    r: int | None                 # the prime for an almost elusive verdict
    derangement_primes: tuple
    degree: int
    socle_order: int
    group_order: int
    classes: list[GClassSummary]
    certificate: str              # "exact" or "saturation"

    def __str__(self):
        if self.tag == "almost_elusive":
            return f"AlmostElusive({self.r})"
        if self.tag == "elusive":
            return "Elusive"
        return f"Neither({len([c for c in self.classes if c.fixed_points == 0])}, {self.derangement_primes})"


def _quotient_cosets(chain_socle, outer_gens):
    """Representatives of the nontrivial cosets of the socle in the group
    generated on top of it by outer_gens, with their orders in the
    quotient."""
    degree = chain_socle.degree
    reps = [tuple(range(degree))]

    def locate(c):
        for i, r in enumerate(reps):
            if chain_socle.contains(pmul(c, pinv(r))):
                return i
        return None

    words = [()]
    i = 0
    while i < len(reps):
        for gi, w in enumerate(outer_gens):
            c = pmul(reps[i], w)
            if locate(c) is None:
                reps.append(c)
                words.append(words[i] + (gi,))
        i += 1
    out = []
    for rep, word in zip(reps[1:], words[1:]):
        k = 1
        acc = rep
        while not chain_socle.contains(acc):
            acc = pmul(acc, rep)
            k += 1
        out.append((rep, word, k))
    return out


def _outer_classes(chain_socle, all_gens, coset_rep, coset_order, coset_id,
                   socle_data: SocleClassData, chain_full, seed,
                   sample_cap=3 * 10**6):
    """G-classes of elements of prime order k = coset_order inside the coset
    socle * coset_rep."""
    k = coset_order
    if not (k > 1 and all(k % d for d in range(2, k))):
        return []   # no prime-order elements can project onto this coset
    degree = chain_socle.degree
    dt = _dtype(degree)
    gen_arrs = [np.array(g, dtype=dt) for g in all_gens]
    ginv_arrs = [np.array(pinv(g), dtype=dt) for g in all_gens]
    order_full = chain_full.order

    exact_target = None
    if socle_data.elements is not None and order_full <= EXACT_COUNT_LIMIT:
        w_arr = np.array(coset_rep, dtype=dt)
        ident = np.arange(degree, dtype=dt)
        count = 0
        step = 1 << 18
        for lo in range(0, socle_data.elements.shape[0], step):
            coset_rows = _compose_rows(socle_data.elements[lo:lo + step], w_arr)
            from .classes import _batch_power

            powered = _batch_power(coset_rows, k)
            count += int((powered == ident).all(axis=1).sum())
        exact_target = count

    sampler = ProductReplacer(list(chain_socle.gens) or [tuple(range(degree))],
                              seed ^ (0xC05E7 + coset_id))
    found = []
    covered = 0
    misses = 0
    samples = 0
    while True:
        if exact_target is not None and covered == exact_target:
            break
        if exact_target is None:
            if found:
                min_size = min(c.class_size for c in found)
                if misses >= (3 * order_full + min_size - 1) // min_size:
                    break
            elif misses >= 64 * coset_order * 100:
                break    # no prime-order elements in this coset at all
        samples += 1
        if samples > sample_cap:
            raise BudgetExceeded(f"outer sampling cap hit in coset {coset_id}",
                                 partial=found)
        x = pmul(sampler.sample(), coset_rep)
        o = perm_order(x)
        if o % k:
            misses += 0
            continue
        y = perm_power(x, o // k)
        if chain_socle.contains(y):
            continue    # the k-part fell back into the socle
        b = np.array(y, dtype=dt).tobytes()
        if any(b in c.members for c in found):
            misses += 1
            continue
        members = conjugation_class(y, gen_arrs, ginv_arrs)
        rec = ClassRec(k, y, chain_full.factor_word(y), len(members),
                       fixed_points(y), coset=coset_id, members=members)
        found.append(rec)
        covered += rec.class_size
        misses = 0
        if exact_target is not None:
            assert covered <= exact_target
    found.sort(key=lambda c: (c.class_size, c.representative))
    for i, rec in enumerate(found):
        rec.label = f"outer{coset_id}:{k}{chr(ord('a') + i)}"
    return found


def derangement_verdict(omega_gens, socle_count=None, *, work_gens=None,
                        seed=DEFAULT_SEED, known_socle_order=None,
                        known_full_order=None, exact_limit=EXACT_COUNT_LIMIT,
                        socle_data: SocleClassData | None = None,
                        sample_checks=12) -> Verdict:
    """Classify the action of G = <omega_gens> on its domain as elusive,
    almost elusive, or neither.

    omega_gens: permutations of Omega; the first socle_count of them generate
    the socle (all of them, when socle_count is None).  work_gens, aligned
    1:1 with omega_gens, may provide a smaller faithful action on which the
    class computation runs; socle_data allows reuse of socle classes across
    several extensions/actions of the same group.
    """
    degree = len(omega_gens[0])
    if not is_transitive(omega_gens, degree):
        raise NotTransitive(f"group is not transitive on the {degree} points")
    if socle_count is None:
        socle_count = len(omega_gens)
    if work_gens is None:
        work_gens = omega_gens
    work_socle = [tuple(g) for g in work_gens[:socle_count]]
    work_outer = [tuple(g) for g in work_gens[socle_count:]]

    if socle_data is None:
        chain_socle = bsgs(work_socle, known_order=known_socle_order)
        socle_data = socle_class_data(
            chain_socle, seed=seed, exact_limit=exact_limit,
            keep_elements=bool(work_outer))
    chain_socle = socle_data.chain
    # normality of the socle under the outer generators
    for w in work_outer:
        winv = pinv(w)
        for s in work_socle:
            if not chain_socle.contains(pmul(pmul(winv, s), w)):
                raise NotNormal("outer generator does not normalize the socle")

    if work_outer:
        chain_full = bsgs(list(work_socle) + list(work_outer),
                          known_order=known_full_order)
    else:
        chain_full = chain_socle

    fused = fuse_classes(socle_data.classes, work_outer, chain_socle.degree)

    outer_classes = []
    if work_outer:
        cosets = _quotient_cosets(chain_socle, work_outer)
        for cid, (rep, word, k) in enumerate(cosets, start=1):
            outer_classes.extend(_outer_classes(
                chain_socle, list(work_socle) + list(work_outer), rep, k, cid,
                socle_data, chain_full, seed))

    # fixed points on Omega via generator-word replay
    same_action = all(tuple(a) == tuple(b) for a, b in zip(work_gens, omega_gens)) \
        and len(work_gens) == len(omega_gens)
    omega = [tuple(g) for g in omega_gens]
    omega_inv = [pinv(g) for g in omega]
    rng_sampler = ProductReplacer(omega, seed ^ 0xF1BED)

    def omega_fixed(word, work_fp):
        if same_action:
            return work_fp
        p = evaluate_word(word, omega, omega_inv, degree)
        fp = fixed_points(p)
        for _ in range(sample_checks):
            g = rng_sampler.sample()
            if fixed_points(pmul(pmul(pinv(g), p), g)) != fp:
                raise AssertionError("fixed points not constant on class")
        return fp

    summaries = []
    for f in fused:
        fp = omega_fixed(f.rep_words[0], f.fixed_points)
        summaries.append(GClassSummary(f.element_order, f.class_size, fp,
                                       0, f.parts))
    for c in outer_classes:
        fp = omega_fixed(c.rep_word, c.fixed_points)
        summaries.append(GClassSummary(c.element_order, c.class_size, fp,
                                       c.coset, (c.label,)))

    derangements = [s for s in summaries if s.fixed_points == 0]
    primes = tuple(sorted({s.element_order for s in derangements}))
    if not derangements:
        tag, r = "elusive", None
    elif len(derangements) == 1:
        tag, r = "almost_elusive", derangements[0].element_order
    else:
        tag, r = "neither", None
    certificate = "exact" if socle_data.exact else "saturation"
    return Verdict(tag, r, primes, degree, chain_socle.order,
                   chain_full.order, summaries, certificate)


def find_derangement(gens, seed=DEFAULT_SEED, max_tries=10**5):
    """A derangement found by seeded random search (existence witness)."""
    sampler = ProductReplacer([tuple(g) for g in gens], seed)
    for _ in range(max_tries):
        x = sampler.sample()
        if fixed_points(x) == 0:
            return x
    raise RuntimeError("no derangement found within the search budget")


def find_prime_power_derangement(gens, seed=DEFAULT_SEED, max_tries=10**5):
    """A derangement of prime-power order, by sampling and taking p-parts."""
    sampler = ProductReplacer([tuple(g) for g in gens], seed)
    for _ in range(max_tries):
        x = sampler.sample()
        o = perm_order(x)
        if o == 1:
            continue
        for p in factor(o).entries:
            pk = p ** _val(o, p)
            y = perm_power(x, o // pk)
            if fixed_points(y) == 0:
                return y, pk
    raise RuntimeError("no prime-power derangement found within the budget")


def _val(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
