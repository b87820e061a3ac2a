"""The 3-strand braid group as a computational object.

Words are tuples of letters from {+1, -1, +2, -2}, where +-k stands for the
standard generator sigma_k or its inverse.  Every element has a unique left
weighted Garside normal form Delta^d s_1 ... s_l: Delta = sigma_1 sigma_2
sigma_1 is the half twist, and the s_i are the six permutation braids
{e, sigma_1, sigma_2, sigma_1 sigma_2, sigma_2 sigma_1, Delta} restricted to
exclude e and Delta, with each adjacent pair (s, t) left weighted (no
generator can move from the front of t to the end of s keeping both simple).
Normal forms solve the word problem; conjugacy is decided by cycling and
decycling into the super summit set and closing it up under conjugation by
simples.

The six simples biject with the symmetric group S3, so all structural tables
(products, maximal transferable prefixes, the Delta-conjugation flip) are
computed here by brute force over S3 and asserted once at import.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable

Word = tuple[int, ...]

LETTERS = (1, -1, 2, -2)

HALF_TWIST: Word = (1, 2, 1)           # Delta
FULL_TWIST: Word = (1, 2, 1, 1, 2, 1)  # Delta^2 = (sigma_1 sigma_2)^3, central


class BraidParseError(ValueError):
    """Input text is not a word in the braid grammar."""


# ---------------------------------------------------------------------------
# simples and their tables (indices 0..5)
# ---------------------------------------------------------------------------

E, S1, S2, S12, S21, DELTA = range(6)

SIMPLE_WORDS: dict[int, Word] = {
    E: (),
    S1: (1,),
    S2: (2,),
    S12: (1, 2),
    S21: (2, 1),
    DELTA: (1, 2, 1),
}

_GEN_PERM = {1: (1, 0, 2), 2: (0, 2, 1)}


def _compose(a, b):
    # strand starting at i ends at b[a[i]]: apply a, then b
    return (b[a[0]], b[a[1]], b[a[2]])


def _perm_inv(p):
    q = [0, 0, 0]
    for i, x in enumerate(p):
        q[x] = i
    return tuple(q)


def _inversions(p):
    return sum(1 for i, j in itertools.combinations(range(3), 2) if p[i] > p[j])


def _perm_of_word(word):
    p = (0, 1, 2)
    for k in word:
        p = _compose(p, _GEN_PERM[abs(k)])
    return p


_SIMPLE_PERM = {s: _perm_of_word(w) for s, w in SIMPLE_WORDS.items()}
_PERM_SIMPLE = {p: s for s, p in _SIMPLE_PERM.items()}
_LEN = {s: len(w) for s, w in SIMPLE_WORDS.items()}

# tau is conjugation by Delta; it swaps sigma_1 <-> sigma_2 and has order 2
_TAU = (E, S2, S1, S21, S12, DELTA)

# left complements: Delta = comp(s) * s, i.e. comp(s) = Delta * s^-1, so
# s^-1 = Delta^-1 * comp(s)
_LEFT_COMP = {}
for _s, _p in _SIMPLE_PERM.items():
    _c = _PERM_SIMPLE[_compose(_SIMPLE_PERM[DELTA], _perm_inv(_p))]
    assert _LEN[_c] + _LEN[_s] == 3
    assert _compose(_SIMPLE_PERM[_c], _p) == _SIMPLE_PERM[DELTA]
    _LEFT_COMP[_s] = _c

_NEG_LETTER = {1: _LEFT_COMP[S1], 2: _LEFT_COMP[S2]}


def _build_renorm():
    """For each pair (x, y), transfer the maximal simple prefix of y onto x.

    The transferable prefixes of y that keep x * u simple are closed under
    join, so there is a unique maximal one; the pair is left weighted exactly
    when that maximum is trivial.
    """
    renorm = [[None] * 6 for _ in range(6)]
    normal = [[False] * 6 for _ in range(6)]
    for x, y in itertools.product(range(6), range(6)):
        candidates = []
        for u in range(6):
            quot = _compose(_perm_inv(_SIMPLE_PERM[u]), _SIMPLE_PERM[y])
            if _inversions(quot) != _LEN[y] - _LEN[u]:
                continue  # u is not a prefix of y
            prod = _compose(_SIMPLE_PERM[x], _SIMPLE_PERM[u])
            if _inversions(prod) != _LEN[x] + _LEN[u]:
                continue  # x * u is not simple
            candidates.append((u, _PERM_SIMPLE[prod], _PERM_SIMPLE[quot]))
        top = max(_LEN[u] for u, _, _ in candidates)
        best = [c for c in candidates if _LEN[c[0]] == top]
        assert len(best) == 1, f"maximal transfer not unique for pair ({x}, {y})"
        u, xu, quot = best[0]
        renorm[x][y] = (xu, quot)
        normal[x][y] = u == E
    return tuple(map(tuple, renorm)), tuple(map(tuple, normal))


_RENORM, _NORMAL = _build_renorm()

# tau commutes with renormalisation (needed for moving Delta powers around)
for _x, _y in itertools.product(range(6), range(6)):
    _a, _b = _RENORM[_x][_y]
    assert _RENORM[_TAU[_x]][_TAU[_y]] == (_TAU[_a], _TAU[_b])


# ---------------------------------------------------------------------------
# word-level operations
# ---------------------------------------------------------------------------

def check_word(word: Iterable[int]) -> Word:
    w = tuple(word)
    for k in w:
        if k not in (1, -1, 2, -2):
            raise BraidParseError(f"invalid braid letter {k!r}")
    return w


_LETTER_RE = re.compile(r"-?\d+")


def parse_word(text: str) -> Word:
    """Parse the braid grammar: integers in {+-1, +-2} separated by one or
    more spaces or a single comma, with no trailing separators."""
    if text == "":
        return ()
    letters = []
    i, n = 0, len(text)
    while True:
        m = _LETTER_RE.match(text, i)
        if m is None:
            raise BraidParseError(f"expected a braid letter at position {i} in {text!r}")
        if m.group() not in ("1", "-1", "2", "-2"):
            raise BraidParseError(f"invalid letter {m.group()!r} at position {i}")
        letters.append(int(m.group()))
        i = m.end()
        if i == n:
            return tuple(letters)
        if text[i] == ",":
            i += 1
        elif text[i] == " ":
            while i < n and text[i] == " ":
                i += 1
        else:
            raise BraidParseError(f"invalid separator {text[i]!r} at position {i}")
        if i == n:
            raise BraidParseError(f"trailing separator at end of {text!r}")


def format_word(word: Word) -> str:
    return " ".join(str(k) for k in word)


def exponent_sum(word: Word) -> int:
    return sum(1 if k > 0 else -1 for k in word)


def mirror(word: Word) -> Word:
    return tuple(-k for k in word)


def reverse(word: Word) -> Word:
    return tuple(reversed(word))


def invert(word: Word) -> Word:
    return tuple(-k for k in reversed(word))


def concat(w1: Word, w2: Word) -> Word:
    return tuple(w1) + tuple(w2)


def conjugate_by(word: Word, u: Word) -> Word:
    """u * word * u^-1."""
    return tuple(u) + tuple(word) + invert(u)


def surgery_twist(word: Word, n: int) -> Word:
    """Append 2n full twists, left handed for n > 0 and right handed for n < 0.

    This is the braid-level effect of a 1/n surgery on the lifted braid axis;
    the exponent sum changes by -12n.
    """
    if n >= 0:
        return tuple(word) + (-2, -1) * (6 * n)
    return tuple(word) + (1, 2) * (-6 * n)


# ---------------------------------------------------------------------------
# normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    """Left weighted form Delta^delta_power * factors, factors in {S1,S2,S12,S21}."""

    delta_power: int
    factors: tuple[int, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def exponent_sum(self) -> int:
        return 3 * self.delta_power + sum(_LEN[f] for f in self.factors)

    def factor_words(self) -> tuple[Word, ...]:
        return tuple(SIMPLE_WORDS[f] for f in self.factors)

    def to_word(self) -> Word:
        delta = HALF_TWIST if self.delta_power >= 0 else invert(HALF_TWIST)
        out: list[int] = []
        for _ in range(abs(self.delta_power)):
            out.extend(delta)
        for f in self.factors:
            out.extend(SIMPLE_WORDS[f])
        return tuple(out)

    def tau(self) -> "NormalForm":
        """Conjugate by Delta: swap sigma_1 <-> sigma_2 in every factor."""
        return NormalForm(self.delta_power, tuple(_TAU[f] for f in self.factors))


def _strip(factors: list[int]) -> tuple[int, tuple[int, ...]]:
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == DELTA:
        lo += 1
    while lo < hi and factors[hi - 1] == E:
        hi -= 1
    return lo, tuple(factors[lo:hi])


def _normalize_factors(factors: list[int]) -> tuple[int, tuple[int, ...]]:
    """Left weight an arbitrary factor sequence by local transfers.

    Each transfer strictly moves letter weight to the left, so iterating to a
    fixpoint terminates; at the fixpoint Deltas sit at the front and trivial
    factors at the back, where _strip removes them.
    """
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            na, nb = _RENORM[a][b]
            if na != a:
                factors[i], factors[i + 1] = na, nb
                changed = True
    return _strip(factors)


def _merge(left: list[int], right: list[int]) -> tuple[int, tuple[int, ...]]:
    """Product of two already left weighted sequences.

    Violations start at the junction and propagate backwards; combing each
    one back keeps everything to the left weighted, so a single sweep from
    the junction suffices.
    """
    if not left or not right or _NORMAL[left[-1]][right[0]]:
        return _strip(left + right)
    factors = left + right
    for i in range(len(left) - 1, len(factors) - 1):
        a, b = _RENORM[factors[i]][factors[i + 1]]
        if a == factors[i]:
            break
        factors[i], factors[i + 1] = a, b
        for j in range(i - 1, -1, -1):
            a, b = _RENORM[factors[j]][factors[j + 1]]
            if a == factors[j]:
                break
            factors[j], factors[j + 1] = a, b
    return _strip(factors)


def nf_mul(x: NormalForm, y: NormalForm) -> NormalForm:
    """Group multiplication on normal forms.

    The Delta power of y passes left through the factors of x, twisting them
    by tau when it is odd.
    """
    left = list(x.factors) if y.delta_power % 2 == 0 else [_TAU[f] for f in x.factors]
    carry, factors = _merge(left, list(y.factors))
    return NormalForm(x.delta_power + y.delta_power + carry, factors)


def normal_form(word: Word) -> NormalForm:
    """The unique left weighted normal form of a word."""
    factors: list[int] = []
    shifts: list[int] = []
    for k in check_word(word):
        if k > 0:
            factors.append(S1 if k == 1 else S2)
            shifts.append(0)
        else:
            factors.append(_NEG_LETTER[-k])
            shifts.append(-1)
    # every Delta^-1 moves to the front, twisting the factors it passes
    suffix = 0
    for j in range(len(factors) - 1, -1, -1):
        if suffix % 2:
            factors[j] = _TAU[factors[j]]
        suffix += shifts[j]
    carry, normalized = _normalize_factors(factors)
    return NormalForm(sum(shifts) + carry, normalized)


def is_equal(w1: Word, w2: Word) -> bool:
    """Word problem: equal in the group iff the normal forms coincide."""
    return normal_form(w1) == normal_form(w2)


# ---------------------------------------------------------------------------
# conjugacy via the super summit set
# ---------------------------------------------------------------------------

_SIMPLE_NF = {s: NormalForm(0, (s,)) for s in (S1, S2, S12, S21)}
_SIMPLE_NF[DELTA] = NormalForm(1, ())
_SIMPLE_INV_NF = {s: NormalForm(-1, (_LEFT_COMP[s],)) for s in (S1, S2, S12, S21)}
_SIMPLE_INV_NF[DELTA] = NormalForm(-1, ())


def _cycle(v: NormalForm) -> NormalForm:
    """Cycling: conjugate by tau^-d(f_1), giving Delta^d f_2 .. f_l tau^-d(f_1).

    Neither cycling nor decycling can lower inf or raise sup, since the
    result is again Delta^d times l permutation braids.
    """
    if not v.factors:
        return v
    head, tail = v.factors[0], v.factors[1:]
    if v.delta_power % 2:
        head = _TAU[head]
    return nf_mul(NormalForm(v.delta_power, tail), _SIMPLE_NF[head])


def _decycle(v: NormalForm) -> NormalForm:
    """Decycling: conjugate by f_l, giving f_l Delta^d f_1 .. f_{l-1}."""
    if not v.factors:
        return v
    body, last = v.factors[:-1], v.factors[-1]
    return nf_mul(_SIMPLE_NF[last], NormalForm(v.delta_power, body))


def _better(a: NormalForm, b: NormalForm) -> bool:
    return a.inf > b.inf or a.sup < b.sup


def _orbit_improve(v: NormalForm, step) -> tuple[NormalForm, bool]:
    """Iterate step until it strictly improves (inf, -sup) or the orbit closes.

    Cycling and decycling are deterministic, so revisiting a normal form with
    no improvement seen means none is available along this orbit.
    """
    seen = set()
    u = v
    while u not in seen:
        seen.add(u)
        u = step(u)
        if _better(u, v):
            return u, True
    return v, False


def _summit_representative(v: NormalForm) -> NormalForm:
    while True:
        v, cycled = _orbit_improve(v, _cycle)
        v, decycled = _orbit_improve(v, _decycle)
        if not (cycled or decycled):
            return v


def _conjugates_by_simples(v: NormalForm):
    for s in (S1, S2, S12, S21, DELTA):
        yield nf_mul(nf_mul(_SIMPLE_INV_NF[s], v), _SIMPLE_NF[s])
        yield nf_mul(nf_mul(_SIMPLE_NF[s], v), _SIMPLE_INV_NF[s])


def _summit_closure(v: NormalForm) -> frozenset[NormalForm]:
    # close under conjugation by simples, restarting if anything beats (inf, sup)
    while True:
        seen = {v}
        stack = [v]
        restart = None
        while stack and restart is None:
            u = stack.pop()
            for c in _conjugates_by_simples(u):
                if _better(c, v):
                    restart = c
                    break
                if (c.inf, c.sup) == (v.inf, v.sup) and c not in seen:
                    seen.add(c)
                    stack.append(c)
        if restart is None:
            return frozenset(seen)
        v = _summit_representative(restart)


def super_summit_set(word: Word) -> frozenset[NormalForm]:
    """All conjugates of minimal canonical length and maximal Delta power."""
    return _summit_closure(_summit_representative(normal_form(word)))


def is_conjugate(w1: Word, w2: Word) -> bool:
    """Conjugacy decision: summit sets of conjugate elements coincide and of
    non-conjugate elements are disjoint, so one membership test settles it."""
    nf1, nf2 = normal_form(w1), normal_form(w2)
    if nf1 == nf2:
        return True
    if nf1.exponent_sum != nf2.exponent_sum:
        return False
    target = _summit_representative(nf2)
    return target in _summit_closure(_summit_representative(nf1))
