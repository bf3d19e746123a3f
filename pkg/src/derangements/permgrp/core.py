"""Permutations, stabilizer chains and random elements.

Permutations are tuples of images on 0..degree-1; pmul(a, b) composes left
to right (apply a, then b), matching the row-vector convention of the matrix
layer.  The stabilizer chain is built by the deterministic Schreier-Sims
algorithm with greedy base selection (first moved point), and every
transversal element carries its word in the original generators so that any
group element can be rewritten as a generator word and replayed inside a
different action of the same group.
"""

from __future__ import annotations

from math import gcd, lcm


class DegreeTooLarge(RuntimeError):
    pass


class NotASubgroup(ValueError):
    pass


class IndexTooLarge(RuntimeError):
    pass


MAX_DEGREE = 10**6

DEFAULT_SEED = 0xD1CE


def pmul(a, b):
    """Compose permutations: apply a, then b."""
    return tuple(b[x] for x in a)


def pinv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity_perm(n):
    return tuple(range(n))


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def perm_order(p):
    seen = [False] * len(p)
    o = 1
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            o = lcm(o, length)
    return o


def perm_power(p, k):
    if k < 0:
        return perm_power(pinv(p), -k)
    result = identity_perm(len(p))
    base = p
    while k:
        if k & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        k >>= 1
    return result


def fixed_points(p):
    return sum(1 for i, x in enumerate(p) if i == x)


def cycle_type(p):
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths))


def orbit_of(gens, pt):
    orb = {pt}
    queue = [pt]
    while queue:
        a = queue.pop()
        for g in gens:
            b = g[a]
            if b not in orb:
                orb.add(b)
                queue.append(b)
    return orb


def is_transitive(gens, degree):
    return len(orbit_of(gens, 0)) == degree


def evaluate_word(word, gens, inverses=None, degree=None):
    """Replay a signed generator word (1-based indices, negative = inverse)
    in any aligned generator list."""
    if degree is None:
        degree = len(gens[0])
    if inverses is None:
        inverses = [pinv(g) for g in gens]
    acc = identity_perm(degree)
    for step in word:
        g = gens[step - 1] if step > 0 else inverses[-step - 1]
        acc = pmul(acc, g)
    return acc


class _Complete(Exception):
    pass


class BSGS:
    """Base and strong generating set with word-tracked transversals, built
    by the deterministic Schreier-Sims algorithm (base points chosen greedily
    as first moved points; level i holds every strong generator stabilizing
    the first i base points).

    known_order is a trusted certificate: the build stops as soon as the
    chain reaches it (the product of orbit lengths never exceeds the true
    order), skipping the remaining Schreier verification sweeps.  Passing a
    wrong known_order is unsound -- never use it to probe whether some
    generators reach a target order.
    """

    def __init__(self, gens, degree=None, known_order=None):
        gens = [tuple(g) for g in gens if not is_identity(g)]
        if degree is None:
            degree = len(gens[0]) if gens else 1
        if degree > MAX_DEGREE:
            raise DegreeTooLarge(f"degree {degree} exceeds {MAX_DEGREE}")
        self.degree = degree
        self.gens = gens
        self._known = known_order
        self.base: list[int] = []
        self.S: list[list] = []      # S[i]: (perm, word) stabilizing base[:i]
        self.trans: list[dict] = []  # point -> (perm, word), perm[base[i]] = point
        try:
            self._build()
            if known_order is not None and self.order != known_order:
                raise ValueError(
                    f"chain order {self.order} != declared order {known_order}")
        except _Complete:
            pass

    # -- construction -------------------------------------------------------
    def _new_level(self, beta):
        self.base.append(beta)
        self.S.append([])
        self.trans.append({})

    def _insert(self, g, word):
        """Place a strong generator on every level it stabilizes down to."""
        if not self.base or all(g[b] == b for b in self.base):
            beta = next(x for x in range(self.degree) if g[x] != x)
            self._new_level(beta)
        level = 0
        self.S[level].append((g, word))
        while level + 1 < len(self.base) and g[self.base[level]] == self.base[level]:
            level += 1
            self.S[level].append((g, word))
        return level

    def _rebuild_trans(self, i):
        beta = self.base[i]
        trans = {beta: (identity_perm(self.degree), ())}
        queue = [beta]
        while queue:
            a = queue.pop(0)
            ta, wa = trans[a]
            for g, w in self.S[i]:
                b = g[a]
                if b not in trans:
                    trans[b] = (pmul(ta, g), wa + w)
                    queue.append(b)
        self.trans[i] = trans

    def _check_done(self):
        if self._known is not None and self.order == self._known:
            raise _Complete

    def _build(self):
        for idx, g in enumerate(self.gens):
            self._insert(g, (idx + 1,))
        if not self.base:
            return
        for i in range(len(self.base)):
            self._rebuild_trans(i)
        self._check_done()
        i = len(self.base) - 1
        while i >= 0:
            deeper = self._verify_level(i)
            i = deeper if deeper is not None else i - 1

    def _verify_level(self, i):
        """Sift all Schreier generators at level i through the deeper chain.
        On failure the residue is installed at its levels and their index is
        returned; None means the level is verified."""
        trans = self.trans[i]
        for a in sorted(trans):
            ta, wa = trans[a]
            for h, wh in self.S[i]:
                b = h[a]
                tb, wb = trans[b]
                sg = pmul(pmul(ta, h), pinv(tb))
                if is_identity(sg):
                    continue
                wsg = wa + wh + tuple(-s for s in reversed(wb))
                residue, wres = self._sift(sg, wsg, i + 1)
                if residue is None:
                    continue
                if all(residue[bp] == bp for bp in self.base):
                    beta = next(x for x in range(self.degree) if residue[x] != x)
                    self._new_level(beta)
                level = 0
                while level + 1 < len(self.base) and \
                        residue[self.base[level]] == self.base[level]:
                    level += 1
                # the residue is a product of level-(i+1) strong generators,
                # so only levels i+1..level need it explicitly
                for j in range(i + 1, level + 1):
                    self.S[j].append((residue, wres))
                    self._rebuild_trans(j)
                self._check_done()
                return level
        return None

    def _sift(self, g, word, level):
        """Sift g through levels >= level; None residue means member."""
        for i in range(level, len(self.base)):
            b = g[self.base[i]]
            if b == self.base[i]:
                continue
            if b not in self.trans[i]:
                return g, word
            t, wt = self.trans[i][b]
            g = pmul(g, pinv(t))
            word = word + tuple(-s for s in reversed(wt))
        if is_identity(g):
            return None, ()
        return g, word

    # -- queries --------------------------------------------------------------
    @property
    def order(self):
        o = 1
        for t in self.trans:
            o *= max(1, len(t))
        return o

    def base_points(self):
        return list(self.base)

    def contains(self, p):
        if len(p) != self.degree:
            return False
        residue, _ = self._sift(tuple(p), (), 0)
        return residue is None

    def factor_word(self, p):
        """Express a member as a signed word in the original generators.

        Returns a word w with evaluate_word(w, gens) == p.
        """
        g = tuple(p)
        parts = []
        for i in range(len(self.base)):
            b = g[self.base[i]]
            if b == self.base[i]:
                continue
            if b not in self.trans[i]:
                raise NotASubgroup("element is not in the group")
            t, wt = self.trans[i][b]
            parts.append(wt)
            g = pmul(g, pinv(t))
        if not is_identity(g):
            raise NotASubgroup("element is not in the group")
        # g = t_k ... t_1 reading parts in reverse composition order
        word: tuple[int, ...] = ()
        for wt in reversed(parts):
            word = word + wt
        return word


def bsgs(gens, degree=None, known_order=None) -> BSGS:
    """Deterministic stabilizer chain (greedy first-moved-point base)."""
    return BSGS(gens, degree, known_order)


class ProductReplacer:
    """Rattle-style product replacement with a fixed seed; all randomized
    paths in the package flow through this class, so runs are repeatable."""

    def __init__(self, gens, seed=DEFAULT_SEED, extra=6, scramble=60):
        import random

        if not gens:
            raise ValueError("need at least one generator")
        self.rng = random.Random(seed)
        degree = len(gens[0])
        self.slots = list(gens) + [identity_perm(degree)] * extra
        self.accum = identity_perm(degree)
        for _ in range(scramble):
            self._stir()

    def _stir(self):
        rng = self.rng
        i = rng.randrange(len(self.slots))
        j = rng.randrange(len(self.slots))
        while j == i:
            j = rng.randrange(len(self.slots))
        s = self.slots[j]
        if rng.randrange(2):
            s = pinv(s)
        if rng.randrange(2):
            self.slots[i] = pmul(self.slots[i], s)
        else:
            self.slots[i] = pmul(s, self.slots[i])
        self.accum = pmul(self.accum, self.slots[i])

    def sample(self):
        self._stir()
        return self.accum


def reduce_generators(gens, target_order, seed=DEFAULT_SEED, tries=25):
    """Search for a pair (or triple) of short generator words with the known
    group order.

    Returns (new_gens, words): each new generator carries its signed word in
    the original list, so aligned generator sets in other actions can be
    reduced consistently.
    """
    if len(gens) <= 3:
        return list(gens), [[i + 1] for i in range(len(gens))]
    import random

    rng = random.Random(seed)
    n_gens = len(gens)
    for size in (2, 3, 4):
        for _ in range(tries):
            words = []
            for _ in range(size):
                ln = rng.randrange(2, 7)
                words.append([rng.choice((1, -1)) * (rng.randrange(n_gens) + 1)
                              for _ in range(ln)])
            cand = [evaluate_word(w, gens) for w in words]
            if any(is_identity(c) for c in cand):
                continue
            # no known_order shortcut here: the candidate group may be proper,
            # and an early exit would certify a wrong order
            if BSGS(cand).order == target_order:
                return cand, words
    raise RuntimeError("generator reduction failed")


def coset_action(group: BSGS, h_gens, max_index=10**6):
    """Permutation action of a group on the right cosets of a subgroup.

    h_gens must lie in the group (checked by sifting).  Returns (perms,
    reps): one permutation of the coset space per original group generator,
    plus the coset representatives.
    """
    for h in h_gens:
        if not group.contains(h):
            raise NotASubgroup("subgroup generator fails membership")
    sub = BSGS(list(h_gens), group.degree)
    index = group.order // sub.order
    if index > max_index:
        raise IndexTooLarge(f"index {index} exceeds {max_index}")
    degree = group.degree
    reps = [identity_perm(degree)]
    gens = [tuple(g) for g in group.gens]

    def locate(c):
        cinv = pinv(c)
        for k, r in enumerate(reps):
            if sub.contains(pmul(r, cinv)):
                return k
        return None

    images = [[] for _ in gens]
    i = 0
    while i < len(reps):
        for gi, g in enumerate(gens):
            c = pmul(reps[i], g)
            k = locate(c)
            if k is None:
                reps.append(c)
                k = len(reps) - 1
            images[gi].append(k)
        i += 1
    assert len(reps) == index
    perms = [tuple(img) for img in images]
    return perms, reps
