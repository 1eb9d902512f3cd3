"""Independent brute-force reference implementations.

Everything in here works on plain tuples/lists/dicts and deliberately avoids
the library's own data structures and algorithms, so tests can cross-check
the optimized implementations against first-principles enumeration. Expected
values frozen into the test files were produced by these functions.
"""

import itertools
from fractions import Fraction

import numpy as np


# ---------------------------------------------------------------------------
# Free categories: path enumeration.
# ---------------------------------------------------------------------------

def enumerate_paths(edges, start, end, max_len):
    """All label sequences of paths start -> end with length <= max_len.

    edges: list of (label, dom, cod) triples. Returns a set of tuples.
    """
    found = set()
    frontier = [(start, ())]
    for _ in range(max_len):
        nxt = []
        for state, word in frontier:
            for label, dom, cod in edges:
                if dom == state:
                    w = word + (label,)
                    if cod == end:
                        found.add(w)
                    nxt.append((cod, w))
        frontier = nxt
    return found


# ---------------------------------------------------------------------------
# Context-free grammars: derivation enumeration.
# ---------------------------------------------------------------------------

def enumerate_cfg_language(binary_rules, lexical_rules, root, max_len):
    """All token tuples of length <= max_len derivable from ``root``.

    binary_rules: list of (head, (child1, child2)); lexical_rules: list of
    (word, head). Works by bottom-up closure over sub-languages.
    """
    lang = {}
    for word, head in lexical_rules:
        lang.setdefault(head, set()).add((word,))
    changed = True
    while changed:
        changed = False
        for head, (c1, c2) in binary_rules:
            for left in lang.get(c1, set()):
                for right in lang.get(c2, set()):
                    cand = left + right
                    if len(cand) <= max_len and cand not in lang.setdefault(head, set()):
                        lang[head].add(cand)
                        changed = True
    return lang.get(root, set())


def cfg_derives(binary_rules, lexical_rules, symbol, tokens, _memo=None):
    """Whether ``symbol`` derives exactly the token tuple (CNF recognizer)."""
    memo = {} if _memo is None else _memo
    key = (symbol, tokens)
    if key in memo:
        return memo[key]
    result = False
    if len(tokens) == 1:
        result = any(w == tokens[0] and h == symbol for w, h in lexical_rules)
    if not result:
        for head, (c1, c2) in binary_rules:
            if head != symbol:
                continue
            for k in range(1, len(tokens)):
                if cfg_derives(binary_rules, lexical_rules, c1, tokens[:k], memo) \
                        and cfg_derives(binary_rules, lexical_rules, c2, tokens[k:], memo):
                    result = True
                    break
            if result:
                break
    memo[key] = result
    return result


# ---------------------------------------------------------------------------
# Premonoidal diagrams: interchanger closure on plain encodings.
#
# An encoding is (dom, boxes, offsets) with dom a tuple of object names,
# boxes a tuple of (name, dom_tuple, cod_tuple) and offsets a tuple of ints.
# ---------------------------------------------------------------------------

def _swap_adjacent(boxes, offsets, i):
    """All interchanges of boxes i and i+1 acting on disjoint intervals.

    Returns a list of (boxes, offsets) variants; empty if the two boxes
    share a wire. The later box can pass entirely left of the earlier one
    when its whole domain sits left of the earlier box's codomain block, and
    entirely right when its domain starts at or after the end of that block.
    Both can hold at once (a state meeting an effect at the same point), in
    which case both variants are legal.
    """
    (n0, d0, c0), (n1, d1, c1) = boxes[i], boxes[i + 1]
    o0, o1 = offsets[i], offsets[i + 1]
    out = []
    new = ((n1, d1, c1), (n0, d0, c0))
    if o1 + len(d1) <= o0:
        offs = (o1, o0 + len(c1) - len(d1))
        out.append((boxes[:i] + new + boxes[i + 2:],
                    offsets[:i] + offs + offsets[i + 2:]))
    if o1 >= o0 + len(c0):
        offs = (o1 - len(c0) + len(d0), o0)
        out.append((boxes[:i] + new + boxes[i + 2:],
                    offsets[:i] + offs + offsets[i + 2:]))
    return out


def interchanger_closure(dom, boxes, offsets):
    """All encodings reachable by adjacent interchanges (BFS)."""
    start = (tuple(boxes), tuple(offsets))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for bs, offs in frontier:
            for i in range(len(bs) - 1):
                for swapped in _swap_adjacent(bs, offs, i):
                    if swapped not in seen:
                        seen.add(swapped)
                        nxt.append(swapped)
        frontier = nxt
    return seen


def closure_least(dom, boxes, offsets):
    """Canonical representative: least closure element under the flat key
    ((offset, name, dom, cod) per layer)."""
    def key(elem):
        bs, offs = elem
        return tuple((offs[i],) + bs[i] for i in range(len(bs)))
    return min(interchanger_closure(dom, boxes, offsets), key=key)


# ---------------------------------------------------------------------------
# Semiring arithmetic by explicit loops.
# ---------------------------------------------------------------------------

def loop_matmul(a, b, add, mul, zero):
    """Plain triple-loop matrix product over an arbitrary semiring."""
    n, k = len(a), len(a[0])
    assert len(b) == k
    m = len(b[0])
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = zero
            for t in range(k):
                acc = add(acc, mul(a[i][t], b[t][j]))
            out[i][j] = acc
    return out


# ---------------------------------------------------------------------------
# Tensor networks: brute-force contraction by valuation enumeration,
# and brute-force width measures.
# ---------------------------------------------------------------------------

def valuation_contract(vertex_tensors, vertex_edges, edge_dims, add, mul, zero, one):
    """Contract a network by summing over all edge valuations.

    vertex_tensors: dict v -> np.ndarray; vertex_edges: dict v -> list of
    edge ids giving the axis order of that vertex's tensor (self-loops list
    the edge twice); edge_dims: dict e -> int.
    """
    edges = sorted(edge_dims)
    total = zero
    for assignment in itertools.product(*(range(edge_dims[e]) for e in edges)):
        val = dict(zip(edges, assignment))
        term = one
        for v, arr in vertex_tensors.items():
            idx = tuple(val[e] for e in vertex_edges[v])
            term = mul(term, arr[idx] if idx else arr[()])
        total = add(total, term)
    return total


def cut_count(order, edges, prefix_len):
    """Edges with exactly one endpoint among the first ``prefix_len`` vertices."""
    inside = set(order[:prefix_len])
    return sum(1 for u, v in edges if (u in inside) != (v in inside))


def order_width(order, edges):
    """Max crossing-edge count over all prefixes of the order."""
    if not order:
        return 0
    return max(cut_count(order, edges, j) for j in range(1, len(order) + 1))


def min_bubblewidth(vertices, edges):
    """Minimum over all vertex orders of the max prefix cut (brute force)."""
    return min(order_width(list(p), edges) for p in itertools.permutations(vertices))


def vertex_separation(vertices, edges):
    """Brute-force vertex separation number, which equals pathwidth."""
    def boundary(order, j):
        placed = set(order[:j])
        return sum(1 for u in placed
                   if any((u, v) in edges or (v, u) in edges
                          for v in vertices if v not in placed))
    best = None
    for p in itertools.permutations(vertices):
        worst = max(boundary(p, j) for j in range(1, len(p) + 1))
        if best is None or worst < best:
            best = worst
    return best


def random_tree_edges(rng, n):
    """Uniform random labeled tree on vertices 0..n-1 via a Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = sorted(l for l in range(n) if degree[l] == 1)[:2]
    edges.append((u, v))
    return edges


# ---------------------------------------------------------------------------
# Pregroup reduction: breadth-first search over cup-contraction steps.
#
# Symbols are (name, winding) pairs; a cup removes an adjacent pair
# ((n, z), (n, z + 1)).
# ---------------------------------------------------------------------------

def pregroup_reduces_to(symbols, target):
    """Whether the symbol string reduces by adjacent cups to [target]."""
    target = tuple(target)
    seen = set()
    frontier = [tuple(symbols)]
    while frontier:
        nxt = []
        for s in frontier:
            if s == target:
                return True
            if s in seen:
                continue
            seen.add(s)
            for i in range(len(s) - 1):
                (n1, z1), (n2, z2) = s[i], s[i + 1]
                if n1 == n2 and z2 == z1 + 1:
                    nxt.append(s[:i] + s[i + 2:])
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# Functions: sampled extensional equality.
# ---------------------------------------------------------------------------

def sampled_equal(f, g, domains, rng, samples=25):
    """Compare two callables on sampled tuples drawn from ``domains``.

    domains: list of lists, one pool of candidate values per argument.
    """
    for _ in range(samples):
        args = tuple(pool[rng.randrange(len(pool))] for pool in domains)
        if f(*args) != g(*args):
            return False
    return True


# ---------------------------------------------------------------------------
# Relational queries: direct evaluation against a finite table.
# ---------------------------------------------------------------------------

def who_query(table, predicate_cols, entity):
    """{x | predicate(x, entity)} for a binary predicate given as table columns."""
    i, j = predicate_cols
    return {row[i] for row in table if row[j] == entity}


def exact_weight(tree_weights):
    """Product of rule weights as an exact fraction."""
    acc = Fraction(1)
    for w in tree_weights:
        acc *= Fraction(w)
    return acc
