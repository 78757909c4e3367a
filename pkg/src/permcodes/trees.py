"""Rooted-tree calculus for the formal expansion of dx/dt = V(x(t)).

Topological (unordered) rooted trees are nested tuples of children in
canonical form: the children of every node are sorted, so equal shapes have
equal encodings.  The single node is ``()``, the cherry is ``((), ())``.

Labeled trees are ``(label, children)`` pairs with children sorted by label.
Increasing labelings (root 1, every child label exceeding its parent's) are
counted by the Connes-Moscovici coefficients and biject with permutations.
"""

from __future__ import annotations

import itertools
from functools import cache
from math import factorial

from .codes import Code
from .permutations import Perm, evaluation
from .polynomials import IndexPolynomial

__all__ = [
    'PlaneTree',
    'LabeledTree',
    'TreeSeries',
    'SINGLE_NODE',
    'canonical_tree',
    'tree_size',
    'tree_to_text',
    'tree_from_text',
    'derive',
    'taylor_tree_series',
    'trees_of_size',
    'connes_moscovici',
    'increasing_labelings',
    'labeled_shape',
    'labeled_size',
    'format_labeled_tree',
    'tree_to_perm',
    'perm_to_tree',
    's_code_of_tree',
    'arity_monomial',
    'x_polynomial',
    'code_arity_monomial',
    'c_polynomial',
    'format_v_polynomial',
]

PlaneTree = tuple  # recursive: tuple of child PlaneTrees, canonically sorted
LabeledTree = tuple  # (label, tuple of child LabeledTrees sorted by label)
TreeSeries = dict[PlaneTree, int]

SINGLE_NODE: PlaneTree = ()


def canonical_tree(t: PlaneTree) -> PlaneTree:
    """Recursively sort children so equal shapes compare equal.

    >>> canonical_tree(((((),),), ()))
    ((), (((),),))
    """
    return tuple(sorted(canonical_tree(child) for child in t))


def tree_size(t: PlaneTree) -> int:
    """Number of nodes.

    >>> tree_size(((), ()))
    3
    """
    return 1 + sum(tree_size(child) for child in t)


def tree_to_text(t: PlaneTree) -> str:
    """Nested-parenthesis encoding; the cherry is ``(()())``.

    >>> tree_to_text(((), ()))
    '(()())'
    """
    return '(' + ''.join(tree_to_text(child) for child in t) + ')'


def tree_from_text(text: str) -> PlaneTree:
    """Inverse of ``tree_to_text`` (canonicalizing on the way in).

    >>> tree_from_text('(()())')
    ((), ())
    """
    text = text.strip()
    pos = 0

    def parse() -> PlaneTree:
        nonlocal pos
        if pos >= len(text) or text[pos] != '(':
            raise ValueError(f'expected ( at position {pos} in {text!r}')
        pos += 1
        children = []
        while pos < len(text) and text[pos] == '(':
            children.append(parse())
        if pos >= len(text) or text[pos] != ')':
            raise ValueError(f'expected ) at position {pos} in {text!r}')
        pos += 1
        return tuple(children)

    tree = parse()
    if pos != len(text):
        raise ValueError(f'trailing characters in {text!r}')
    return canonical_tree(tree)


def _attachments(t: PlaneTree):
    """All trees obtained by adding one leaf to one node of ``t``, one result
    per node position (not yet canonicalized)."""
    yield t + ((),)
    for i, child in enumerate(t):
        for grown in _attachments(child):
            yield t[:i] + (grown,) + t[i + 1:]


def derive(series: TreeSeries) -> TreeSeries:
    """Formal derivative: attach one leaf to each node of each support tree,
    re-canonicalize, accumulate coefficients.

    >>> derive({SINGLE_NODE: 1})
    {((),): 1}
    """
    out: TreeSeries = {}
    for tree, coeff in series.items():
        for grown in _attachments(tree):
            key = canonical_tree(grown)
            out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in sorted(out.items()) if v}


@cache
def taylor_tree_series(n: int) -> TreeSeries:
    """The n-th term of the tree expansion: derive applied n−1 times to the
    single node.  Coefficients are the Connes-Moscovici coefficients; they
    sum to (n−1)!.
    """
    if n < 1:
        raise ValueError('tree series terms start at n=1')
    if n == 1:
        return {SINGLE_NODE: 1}
    return derive(taylor_tree_series(n - 1))


def trees_of_size(n: int) -> list[PlaneTree]:
    """All canonical shapes with ``n`` nodes, sorted."""
    return sorted(taylor_tree_series(n))


def connes_moscovici(t: PlaneTree) -> int:
    """Number of increasing labelings of the shape ``t``.

    Recursively: distribute the n−1 non-root labels among the child subtrees
    (multinomial), label each child increasingly, and divide by m! for every
    group of m identical child shapes, whose distinguished label sets would
    otherwise be counted in every order.

    >>> connes_moscovici(((), (((), ()),)))
    5
    """
    n = tree_size(t)
    count = factorial(n - 1)
    for child in t:
        count = count // factorial(tree_size(child)) * connes_moscovici(child)
    for _, group in itertools.groupby(t):
        count //= factorial(sum(1 for _ in group))
    return count


def increasing_labelings(t: PlaneTree) -> list[LabeledTree]:
    """All increasing labelings of ``t`` in canonical form (children sorted by
    label), sorted; the root always gets the smallest available label.

    >>> len(increasing_labelings(((), (((), ()),))))
    5
    """

    def assign(shape: PlaneTree, labels: tuple[int, ...]) -> set[LabeledTree]:
        root, rest = labels[0], labels[1:]
        if not shape:
            return {(root, ())}
        results: set[LabeledTree] = set()
        sizes = [tree_size(child) for child in shape]
        for split in _ordered_splits(rest, sizes):
            child_sets = [
                assign(child, part) for child, part in zip(shape, split)
            ]
            for combo in itertools.product(*child_sets):
                results.add((root, tuple(sorted(combo))))
        return results

    n = tree_size(t)
    return sorted(assign(canonical_tree(t), tuple(range(1, n + 1))))


def _ordered_splits(labels: tuple[int, ...], sizes: list[int]):
    """Partitions of ``labels`` into consecutive blocks of the given sizes
    (as subsets, order inside a block kept sorted)."""
    if not sizes:
        yield ()
        return
    head, *tail = sizes
    for chosen in itertools.combinations(labels, head):
        remaining = tuple(x for x in labels if x not in chosen)
        for rest in _ordered_splits(remaining, tail):
            yield (chosen,) + rest


def labeled_shape(lt: LabeledTree) -> PlaneTree:
    """Forget the labels."""
    _, children = lt
    return canonical_tree(tuple(labeled_shape(child) for child in children))


def labeled_size(lt: LabeledTree) -> int:
    _, children = lt
    return 1 + sum(labeled_size(child) for child in children)


def format_labeled_tree(lt: LabeledTree) -> str:
    """Label:children rendering, e.g. ``1:(2,3:(4:(5,6)))``.

    >>> format_labeled_tree((1, ((2, ()), (3, ((4, ((5, ()), (6, ()))),)))))
    '1:(2,3:(4:(5,6)))'
    """
    label, children = lt
    if not children:
        return str(label)
    inner = ','.join(format_labeled_tree(child) for child in children)
    return f'{label}:({inner})'


def tree_to_perm(lt: LabeledTree) -> Perm:
    """Map an increasing labeled tree of size n to a permutation of size n−1:
    replace each label l by n+1−l, order children increasingly, read the
    prefix (preorder) word, and drop the root.

    >>> lt = increasing_labelings(((), (((), ()),)))[0]
    >>> tree_to_perm(lt)
    (4, 3, 1, 2, 5)
    """
    n = labeled_size(lt)

    def complement(node: LabeledTree) -> LabeledTree:
        label, children = node
        return (n + 1 - label, tuple(sorted(complement(c) for c in children)))

    def preorder(node: LabeledTree) -> list[int]:
        label, children = node
        out = [label]
        for child in children:
            out.extend(preorder(child))
        return out

    return tuple(preorder(complement(lt))[1:])


def perm_to_tree(p: Perm) -> LabeledTree:
    """Inverse of ``tree_to_perm``: the parent of each letter in the word
    n·p is its nearest greater letter to the left; labels are then
    complemented back.

    >>> format_labeled_tree(perm_to_tree((4, 3, 1, 2, 5)))
    '1:(2,3:(4:(5,6)))'
    """
    n = len(p) + 1
    word = (n,) + p
    children: dict[int, list[int]] = {v: [] for v in word}
    stack = [n]
    for v in word[1:]:
        while stack[-1] < v:
            stack.pop()
        children[stack[-1]].append(v)
        stack.append(v)

    def build(value: int) -> LabeledTree:
        label = n + 1 - value
        kids = tuple(sorted(build(child) for child in children[value]))
        return (label, kids)

    return build(n)


def s_code_of_tree(lt: LabeledTree) -> Code:
    """Father labels, minus one, of n, n−1, ..., 2 in an increasing tree.

    Equals the saillance code of ``tree_to_perm(lt)``.

    >>> s_code_of_tree(perm_to_tree((4, 3, 1, 2, 5)))
    (3, 3, 2, 0, 0)
    """
    n = labeled_size(lt)
    father: dict[int, int] = {}

    def walk(node: LabeledTree) -> None:
        label, children = node
        for child in children:
            father[child[0]] = label
            walk(child)

    walk(lt)
    return tuple(father[v] - 1 for v in range(n, 1, -1))


def arity_monomial(t: PlaneTree) -> IndexPolynomial:
    """The monomial ∏ V_{arity(o)} over the nodes o of ``t``.

    >>> arity_monomial(((), (), ())).terms
    {(0, 0, 0, 3): 1}
    """

    def arities(node: PlaneTree) -> list[int]:
        out = [len(node)]
        for child in node:
            out.extend(arities(child))
        return out

    return IndexPolynomial.monomial(arities(t))


def x_polynomial(n: int) -> IndexPolynomial:
    """The n-th term of the expansion as a polynomial in V_0, V_1, ...:
    Σ over shapes of size n of connes_moscovici(T) · ∏ V_{arity}.

    >>> format_v_polynomial(x_polynomial(4))
    'V3*V0^3 + 4*V2*V1*V0^2 + V1^3*V0'
    """
    out = IndexPolynomial.zero()
    for tree, coeff in taylor_tree_series(n).items():
        out = out + arity_monomial(tree) * coeff
    return out


def code_arity_monomial(c: Code) -> IndexPolynomial:
    """The V-monomial of a code of length m: with e = evaluation(c) over
    {0, ..., m}, the product V_{e_0}·V_{e_1}···V_{e_m} — evaluation entries
    become subscripts, one factor per letter of the alphabet.

    >>> code_arity_monomial((0, 0, 0)).terms
    {(0, 0, 0, 3): 1}
    >>> code_arity_monomial((2, 1, 0)).terms
    {(0, 1, 1, 1): 1}
    """
    return IndexPolynomial.monomial(evaluation(c))


def c_polynomial(n: int) -> IndexPolynomial:
    """C_n = x_{n+1} with V_0 set to 1.

    >>> format_v_polynomial(c_polynomial(3))
    'V3 + 4*V2*V1 + V1^3'
    """
    return x_polynomial(n + 1).substitute_one(0)


def format_v_polynomial(poly: IndexPolynomial) -> str:
    """Product-of-V rendering with factors and terms in descending subscript
    order, matching the printed x_n expansions.

    >>> format_v_polynomial(IndexPolynomial.monomial((0, 1, 1), 3))
    '3*V1^2*V0'
    """
    if not poly:
        return '0'
    terms = []
    for key in sorted(poly.terms, key=lambda k: tuple(reversed(k)), reverse=True):
        coeff = poly.terms[key]
        factors = []
        for sub, group in itertools.groupby(sorted(key, reverse=True)):
            power = sum(1 for _ in group)
            factors.append(f'V{sub}' if power == 1 else f'V{sub}^{power}')
        body = '*'.join(factors) if factors else '1'
        terms.append(body if coeff == 1 else f'{coeff}*{body}')
    return ' + '.join(terms)
