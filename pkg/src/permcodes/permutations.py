"""Permutations, words, compositions, and descent machinery.

Permutations are tuples of 1-based values in one-line notation: the tuple
``(3, 1, 4, 5, 2)`` is the permutation sending 1 to 3, 2 to 1, and so on.
The empty tuple is the identity of size 0.  Compositions are tuples of
positive parts; words are tuples of non-negative letters.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

__all__ = [
    'Perm',
    'Word',
    'Composition',
    'EnumerationLimitError',
    'DEFAULT_ENUMERATION_LIMIT',
    'is_permutation',
    'check_permutation',
    'identity',
    'inverse',
    'iter_permutations',
    'descent_set',
    'descent_composition',
    'des',
    'maj',
    'inv',
    'standardize',
    'evaluation',
    'shuffle',
    'shifted_word',
    'shifted_shuffle',
    'insert_one_at',
    'check_composition',
    'composition_descent_set',
    'composition_from_descent_set',
    'conjugate_composition',
    'is_coarser',
    'coarser_compositions',
    'compositions_of',
    'descent_class',
    'coarser_class',
    'identity_block_shuffle',
    'parse_permutation',
    'format_permutation',
    'parse_composition',
    'format_composition',
]

Perm = tuple[int, ...]
Word = tuple[int, ...]
Composition = tuple[int, ...]

#: Materializing a set indexed by S_n is refused above this size unless the
#: caller passes an explicit higher limit.
DEFAULT_ENUMERATION_LIMIT = 8


class EnumerationLimitError(ValueError):
    """Raised when an exhaustive enumeration would exceed the configured bound."""


def _check_limit(n: int, limit: int | None) -> None:
    bound = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    if n > bound:
        raise EnumerationLimitError(
            f'enumeration over size {n} exceeds the limit {bound}; '
            f'pass limit={n} to allow it'
        )


def is_permutation(word: Sequence[int]) -> bool:
    """Whether ``word`` is a bijection of {1, ..., n} in one-line notation.

    >>> is_permutation((3, 1, 2))
    True
    >>> is_permutation((1, 3))
    False
    """
    return sorted(word) == list(range(1, len(word) + 1))


def check_permutation(word: Iterable[int]) -> Perm:
    """Return ``word`` as a permutation tuple, or raise ValueError."""
    p = tuple(word)
    if not is_permutation(p):
        raise ValueError(f'not a permutation of 1..{len(p)}: {p}')
    return p


def identity(n: int) -> Perm:
    """The identity permutation of size ``n``."""
    return tuple(range(1, n + 1))


def inverse(p: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((4, 3, 1, 2, 5))
    (3, 4, 2, 1, 5)
    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v - 1] = i + 1
    return tuple(q)


def iter_permutations(n: int) -> Iterator[Perm]:
    """All permutations of size ``n`` in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def descent_set(p: Perm) -> set[int]:
    """Positions i (1-based) with p(i) > p(i+1).

    >>> sorted(descent_set((9, 3, 5, 7, 2, 1, 4, 6, 8)))
    [1, 4, 5]
    """
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def descent_composition(p: Perm) -> Composition:
    """The composition of n whose proper partial sums are the descents of p.

    >>> descent_composition((1, 5, 4, 3, 2, 6))
    (2, 1, 1, 2)
    >>> descent_composition(())
    ()
    """
    n = len(p)
    if n == 0:
        return ()
    parts = []
    prev = 0
    for i in range(1, n):
        if p[i - 1] > p[i]:
            parts.append(i - prev)
            prev = i
    parts.append(n - prev)
    return tuple(parts)


def des(p: Perm) -> int:
    """Number of descents."""
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def maj(p: Perm) -> int:
    """Major index: the sum of the descent positions.

    >>> maj((9, 3, 5, 7, 2, 1, 4, 6, 8))
    10
    """
    return sum(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def inv(p: Perm) -> int:
    """Inversion number: pairs i < j with p(i) > p(j).

    >>> inv((5, 3, 1, 9, 6, 2, 4, 8, 7))
    14
    """
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def standardize(w: Sequence[int]) -> Perm:
    """The pattern of ``w``: j-th smallest letter becomes j, ties broken left
    to right.

    >>> standardize((3, 1, 4, 1, 5))
    (3, 1, 4, 2, 5)
    """
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order):
        out[i] = rank + 1
    return tuple(out)


def evaluation(w: Word, alphabet_size: int | None = None) -> tuple[int, ...]:
    """Occurrence counts of each letter 0..alphabet_size-1 in ``w``.

    By default a word of size n is read over the alphabet {0, ..., n}, so the
    result has n+1 entries.

    >>> evaluation((4, 5, 1, 4, 3, 2, 5, 1, 8, 1, 2))
    (0, 3, 2, 1, 2, 2, 0, 0, 1, 0, 0, 0)
    >>> evaluation((0, 0, 0))
    (3, 0, 0, 0)
    """
    size = len(w) + 1 if alphabet_size is None else alphabet_size
    counts = [0] * size
    for letter in w:
        if not 0 <= letter < size:
            raise ValueError(f'letter {letter} outside alphabet of size {size}')
        counts[letter] += 1
    return tuple(counts)


def shuffle(u: Word, v: Word) -> list[Word]:
    """All interleavings of ``u`` and ``v``, lexicographically sorted, with
    multiplicity.

    >>> [''.join(map(str, w)) for w in shuffle((1, 2), (4, 3))]
    ['1243', '1423', '1432', '4123', '4132', '4312']
    >>> shuffle((1,), ()) == [(1,)]
    True
    """
    out = []
    for positions in itertools.combinations(range(len(u) + len(v)), len(u)):
        w = [0] * (len(u) + len(v))
        iu = iter(u)
        iv = iter(v)
        pos = set(positions)
        for i in range(len(w)):
            w[i] = next(iu) if i in pos else next(iv)
        out.append(tuple(w))
    out.sort()
    return out


def shifted_word(w: Word, k: int) -> Word:
    """``w`` with every letter increased by ``k``."""
    return tuple(x + k for x in w)


def shifted_shuffle(a: Perm, b: Perm) -> list[Perm]:
    """Shuffle of ``a`` with ``b`` shifted by the size of ``a``, sorted.

    Every element is a permutation of size ``len(a) + len(b)``.

    >>> [''.join(map(str, p)) for p in shifted_shuffle((1, 2), (1,))]
    ['123', '132', '312']
    """
    return shuffle(a, shifted_word(b, len(a)))


def insert_one_at(b: Perm, i: int) -> Perm:
    """The element of the shifted shuffle 1 ⧢ b whose letter 1 sits after
    exactly ``i`` letters.

    >>> insert_one_at((2, 1), 1)
    (3, 1, 2)
    >>> insert_one_at((7, 2, 4, 5, 1, 8, 3, 6), 5)
    (8, 3, 5, 6, 2, 1, 9, 4, 7)
    """
    if not 0 <= i <= len(b):
        raise ValueError(f'insertion slot {i} out of range 0..{len(b)}')
    shifted = shifted_word(b, 1)
    return shifted[:i] + (1,) + shifted[i:]


def check_composition(parts: Iterable[int]) -> Composition:
    """Return ``parts`` as a composition tuple, or raise ValueError."""
    comp = tuple(parts)
    if any(part < 1 for part in comp):
        raise ValueError(f'composition parts must be positive: {comp}')
    return comp


def composition_descent_set(comp: Composition) -> set[int]:
    """Proper partial sums of the parts (the final sum n is excluded).

    >>> sorted(composition_descent_set((2, 1, 1, 2)))
    [2, 3, 4]
    """
    out = set()
    acc = 0
    for part in comp[:-1]:
        acc += part
        out.add(acc)
    return out


def composition_from_descent_set(descents: Iterable[int], n: int) -> Composition:
    """The composition of ``n`` whose proper partial sums are ``descents``.

    >>> composition_from_descent_set({2, 3, 4}, 6)
    (2, 1, 1, 2)
    """
    if n == 0:
        return ()
    parts = []
    prev = 0
    for d in sorted(descents):
        if not prev < d < n:
            raise ValueError(f'descent {d} outside 1..{n - 1}')
        parts.append(d - prev)
        prev = d
    parts.append(n - prev)
    return tuple(parts)


def conjugate_composition(comp: Composition) -> Composition:
    """The composition whose descent set is the complement of ``comp``'s.

    >>> conjugate_composition((3, 1))
    (1, 1, 2)
    >>> conjugate_composition((2, 2))
    (1, 2, 1)
    """
    n = sum(comp)
    complement = set(range(1, n)) - composition_descent_set(comp)
    return composition_from_descent_set(complement, n)


def is_coarser(i_comp: Composition, j_comp: Composition) -> bool:
    """Whether ``i_comp`` is coarser than ``j_comp``: Des(I) ⊆ Des(J).

    >>> is_coarser((3, 3), (2, 1, 1, 2))
    True
    >>> is_coarser((2, 1, 1, 2), (3, 3))
    False
    """
    if sum(i_comp) != sum(j_comp):
        raise ValueError('compositions of different integers are incomparable')
    return composition_descent_set(i_comp) <= composition_descent_set(j_comp)


def coarser_compositions(comp: Composition) -> list[Composition]:
    """All compositions coarser than ``comp``, i.e. with descent set contained
    in Des(comp); sorted in descending lexicographic order.

    >>> coarser_compositions((2, 1))
    [(3,), (2, 1)]
    """
    n = sum(comp)
    descents = sorted(composition_descent_set(comp))
    out = []
    for r in range(len(descents) + 1):
        for subset in itertools.combinations(descents, r):
            out.append(composition_from_descent_set(subset, n))
    out.sort(reverse=True)
    return out


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of ``n`` in descending lexicographic order.

    >>> compositions_of(3)
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if n == 0:
        return [()]
    out = []
    for r in range(n):
        for subset in itertools.combinations(range(1, n), r):
            out.append(composition_from_descent_set(subset, n))
    out.sort(reverse=True)
    return out


def descent_class(comp: Composition, limit: int | None = None) -> list[Perm]:
    """All permutations with descent composition ``comp``, sorted.

    >>> [''.join(map(str, p)) for p in descent_class((2, 1))]
    ['132', '231']
    """
    n = sum(comp)
    _check_limit(n, limit)
    return [p for p in iter_permutations(n) if descent_composition(p) == comp]


def coarser_class(comp: Composition, limit: int | None = None) -> list[Perm]:
    """All permutations whose descent composition is coarser than ``comp``
    (descent set contained in Des(comp)), sorted.

    >>> [''.join(map(str, p)) for p in coarser_class((2, 1))]
    ['123', '132', '231']
    """
    n = sum(comp)
    _check_limit(n, limit)
    allowed = composition_descent_set(comp)
    return [p for p in iter_permutations(n) if descent_set(p) <= allowed]


def identity_block_shuffle(comp: Composition, limit: int | None = None) -> list[Perm]:
    """The shifted shuffle id_{i_1} ⩂ id_{i_2} ⩂ ... ⩂ id_{i_r}, sorted.

    Its elements are exactly the inverses of ``coarser_class(comp)``.

    >>> [''.join(map(str, p)) for p in identity_block_shuffle((2, 1))]
    ['123', '132', '312']
    """
    _check_limit(sum(comp), limit)
    acc = [()]
    for part in comp:
        block = identity(part)
        acc = sorted({w for u in acc for w in shifted_shuffle(u, block)})
    return acc


def parse_permutation(text: str) -> Perm:
    """Parse one-line notation: either a digit string (n ≤ 9) or
    comma-separated values.

    >>> parse_permutation('31452')
    (3, 1, 4, 5, 2)
    >>> parse_permutation('10,2,3,4,5,6,7,8,9,1')
    (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    """
    text = text.strip()
    if ',' in text:
        values = [int(tok) for tok in text.split(',')]
    else:
        values = [int(ch) for ch in text]
    return check_permutation(values)


def format_permutation(p: Perm) -> str:
    """One-line notation: compact digit string for n ≤ 9, comma-separated
    beyond.

    >>> format_permutation((3, 1, 4, 5, 2))
    '31452'
    """
    if len(p) <= 9:
        return ''.join(map(str, p))
    return ','.join(map(str, p))


def parse_composition(text: str) -> Composition:
    """Parse ``(2,1,1,2)``, ``2,1,1,2`` or the compact ``2112``.

    >>> parse_composition('(2,1,1,2)')
    (2, 1, 1, 2)
    >>> parse_composition('2112')
    (2, 1, 1, 2)
    """
    text = text.strip().lstrip('(').rstrip(')')
    if ',' in text:
        parts = [int(tok) for tok in text.split(',')]
    else:
        parts = [int(ch) for ch in text]
    return check_composition(parts)


def format_composition(comp: Composition) -> str:
    """Parenthesized part list, e.g. ``(2,1,1,2)``."""
    return '(' + ','.join(map(str, comp)) + ')'
