"""Tensor networks: diagram translation, contraction orders, bubblewidth.

A network is an undirected multigraph with a tensor per vertex, one axis
per incident edge endpoint. Contracting along a total order of vertices
swallows one tensor at a time into a growing bubble; the bubblewidth of
an order is the largest number of edges crossing the bubble boundary
along the way, and the planner searches for orders that keep it small.
"""

import itertools

import numpy as np

from . import _kernels, hypergraph, rigid
from .errors import BadOrder, NotClosed, ShapeMismatch
from .tensor import Dim, Real, Tensor


class Net:
    """A tensor network: vertices, edges (u, v, dim) and vertex arrays.

    Axes of ``arrays[v]`` follow the declaration order of the edges at v,
    a self-loop contributing its two axes consecutively. ``arrays`` maps
    every vertex to a numpy array over the semiring's dtype.
    """

    def __init__(self, vertices, edges, arrays, semiring=Real):
        self.vertices = list(vertices)
        self.edges = [(u, v, int(d)) for u, v, d in edges]
        self.semiring = semiring
        self.arrays = {v: np.asarray(arrays[v], semiring.dtype)
                       for v in self.vertices}
        if len(set(self.vertices)) != len(self.vertices):
            raise BadOrder("duplicate vertex ids")
        for u, v, d in self.edges:
            if u not in self.arrays or v not in self.arrays:
                raise ShapeMismatch("edge ({}, {}) off the vertex set".format(
                    u, v))
        for v in self.vertices:
            expected = tuple(d for a, b, d in self.edges
                             for end in (a, b) if end == v)
            if self.arrays[v].shape != expected:
                raise ShapeMismatch(
                    "vertex {} carries shape {}, edges demand {}".format(
                        v, self.arrays[v].shape, expected))

    def axes_of(self, vertex):
        """(edge index, endpoint slot) per axis of the vertex array."""
        out = []
        for i, (u, v, _) in enumerate(self.edges):
            for slot, end in enumerate((u, v)):
                if end == vertex:
                    out.append((i, slot))
        return out

    def __repr__(self):
        return "Net({} vertices, {} edges, {})".format(
            len(self.vertices), len(self.edges), self.semiring.tag)


def _axis_sum(array, axis, tag):
    if tag == "Bool":
        return array.any(axis=axis)
    return array.sum(axis=axis)


def contract_with_order(net, order):
    """Swallow the vertices one by one; the value is order-invariant."""
    order = list(order)
    if sorted(order) != sorted(net.vertices):
        raise BadOrder("{} does not enumerate {}".format(
            order, net.vertices))
    tag = net.semiring.tag
    bubble = np.asarray(net.semiring.one, net.semiring.dtype)
    open_axes = []
    for vertex in order:
        array = net.arrays[vertex]
        axes = net.axes_of(vertex)
        # trace self-loops first: both endpoints sit on this vertex
        while True:
            by_edge = {}
            for pos, (edge, _) in enumerate(axes):
                by_edge.setdefault(edge, []).append(pos)
            loop = next((v for v in by_edge.values() if len(v) == 2), None)
            if loop is None:
                break
            array = _axis_sum(
                np.diagonal(array, axis1=loop[0], axis2=loop[1]), -1, tag)
            axes = [a for p, a in enumerate(axes) if p not in loop]
        shared = [pos for pos, (edge, _) in enumerate(axes)
                  if edge in open_axes]
        bubble_pos = [open_axes.index(axes[pos][0]) for pos in shared]
        bubble = np.moveaxis(
            bubble, bubble_pos,
            range(bubble.ndim - len(bubble_pos), bubble.ndim))
        array = np.moveaxis(array, shared, range(len(shared)))
        bubble = _kernels.contract(bubble, array, len(shared), tag)
        open_axes = [e for e in open_axes
                     if e not in {axes[pos][0] for pos in shared}]
        open_axes += [edge for pos, (edge, _) in enumerate(axes)
                      if pos not in shared]
    if open_axes:
        raise ShapeMismatch("dangling edges {} after contraction".format(
            open_axes))
    return bubble.reshape(()).item()


def bubblewidth_of_order(net, order):
    """Largest number of edges crossing a prefix of the order."""
    position = {v: i for i, v in enumerate(order)}
    width = 0
    for i in range(len(order)):
        crossing = sum(1 for u, v, _ in net.edges
                       if (position[u] <= i) != (position[v] <= i))
        width = max(width, crossing)
    return width


def _crossings(net, inside):
    return sum(1 for u, v, _ in net.edges if (u in inside) != (v in inside))


def greedy_order(net):
    """Append whichever vertex keeps the boundary smallest, ties by id."""
    inside, order = set(), []
    remaining = set(net.vertices)
    while remaining:
        best = min(remaining,
                   key=lambda v: (_crossings(net, inside | {v}), v))
        inside.add(best)
        order.append(best)
        remaining.remove(best)
    return order


def best_order(net):
    """Exhaustive minimal-bubblewidth order; exponential, capped at 10."""
    n = len(net.vertices)
    if n > 10:
        raise BadOrder("best_order is exhaustive; {} vertices is past "
                       "the cap of 10".format(n))
    best = [float("inf"), list(net.vertices)]

    def extend(order, inside, width):
        if width >= best[0] and len(order) < n:
            return
        if len(order) == n:
            if width < best[0]:
                best[0], best[1] = width, list(order)
            return
        for v in net.vertices:
            if v in inside:
                continue
            inside.add(v)
            order.append(v)
            extend(order, inside, max(width, _crossings(net, inside)))
            order.pop()
            inside.remove(v)

    extend([], set(), 0)
    return best[1]


def net_from_diagram(diagram, functor):
    """Translate a closed diagram into a network under a tensor functor.

    Boxes become vertices and wires become edges, each wire flattened to
    the product of its dimensions; wires of dimension 1 vanish, and the
    boundary may only carry such wires. Spiders with other than two legs
    become explicit Kronecker-delta vertices.
    """
    graph = hypergraph.from_rigid(diagram).canonical()
    semiring = functor.semiring

    def flat(ob):
        return functor(rigid.Ty(ob)).prod()

    port_obs = list(graph.dom.objects)
    for box in graph.boxes:
        port_obs += list(box.dom.objects) + list(box.cod.objects)
    port_obs += list(graph.cod.objects)
    n_boundary_top = len(graph.dom)
    n_boundary_bot = len(graph.cod)

    # legs per spider: (vertex, port-slot) for box ports, None for boundary
    port_owner = [None] * n_boundary_top
    for b, box in enumerate(graph.boxes):
        port_owner += [(b, p) for p in range(len(box.dom) + len(box.cod))]
    port_owner += [None] * n_boundary_bot

    legs = {s: [] for s in graph.spider_types}
    for port, spider in enumerate(graph.wires):
        legs[spider].append((port_owner[port], port_obs[port]))

    for spider, spider_legs in legs.items():
        for owner, ob in spider_legs:
            if owner is None and flat(ob) != 1:
                raise NotClosed(
                    "boundary wire of dimension {} on {}".format(
                        flat(ob), ob))
    vertices, edges, arrays = [], [], {}
    endpoint_ports = []   # per edge, the (vertex, axis-key) of both ends

    box_port_dims = {}
    for b, box in enumerate(graph.boxes):
        vertices.append(b)
        dims = [flat(ob) for ob in box.dom.objects] \
            + [flat(ob) for ob in box.cod.objects]
        box_port_dims[b] = dims
        arrays[b] = functor(box).array.reshape(
            tuple(d for d in dims if d != 1))

    next_vertex = len(graph.boxes)
    for spider in sorted(graph.spider_types):
        dim = flat(rigid.Ob(graph.spider_types[spider].name))
        if dim == 1:
            continue
        touched = [owner for owner, _ in legs[spider] if owner is not None]
        if len(touched) == 2:
            (u, pu), (v, pv) = touched
            edges.append((u, v, dim))
            endpoint_ports.append(((u, pu), (v, pv)))
            continue
        # a hub vertex carrying the generalized Kronecker delta
        hub = next_vertex
        next_vertex += 1
        vertices.append(hub)
        arrays[hub] = Tensor.spiders(0, len(touched), Dim(dim),
                                     semiring).array
        for slot, (v, pv) in enumerate(touched):
            edges.append((hub, v, dim))
            endpoint_ports.append(((hub, slot), (v, pv)))

    # permute each vertex array from port order into edge declaration order
    axis_keys = {}
    for e, (end0, end1) in enumerate(endpoint_ports):
        for end in (end0, end1):
            axis_keys.setdefault(end[0], []).append(end)
    for v in vertices:
        keys = axis_keys.get(v, [])
        if v in box_port_dims:
            port_order = [p for p in range(len(box_port_dims[v]))
                          if box_port_dims[v][p] != 1]
            current = {("port", p): i for i, p in enumerate(port_order)}
            source = [current[("port", p)] for _, p in keys]
        else:
            source = [slot for _, slot in keys]
        arrays[v] = np.moveaxis(arrays[v], source, range(len(source)))
    return Net(vertices, edges, arrays, semiring)
