"""DOT (graphviz) text for diagrams.

Boxes are rectangles, structural boxes (cups, caps, spiders, swaps) are
dots, boundary ports are plain labels. Output is deterministic: nodes
and edges appear in scan order.
"""

from . import hypergraph, monoidal, rigid


def _is_dot_shaped(box):
    return isinstance(box, (rigid.Cup, rigid.Cap,
                            hypergraph.SpiderBox, hypergraph.SwapBox))


def _monoidal_dot(diagram):
    lines = ["digraph diagram {", "  rankdir=TB;"]
    sources = []
    for i, ob in enumerate(diagram.dom.objects):
        node = "dom{}".format(i)
        lines.append('  {} [shape=plaintext, label="{}"];'.format(node, ob))
        sources.append(node)
    for b, (box, offset) in enumerate(zip(diagram.boxes, diagram.offsets)):
        node = "box{}".format(b)
        if _is_dot_shaped(box):
            lines.append('  {} [shape=point];'.format(node))
        else:
            lines.append('  {} [shape=box, label="{}"];'.format(
                node, box.name))
        for k, ob in enumerate(box.dom.objects):
            lines.append('  {} -> {} [label="{}"];'.format(
                sources[offset + k], node, ob))
        sources[offset:offset + len(box.dom)] = [node] * len(box.cod)
    for i, ob in enumerate(diagram.cod.objects):
        node = "cod{}".format(i)
        lines.append('  {} [shape=plaintext, label="{}"];'.format(node, ob))
        lines.append('  {} -> {} [label="{}"];'.format(sources[i], node, ob))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _hyper_dot(diagram):
    lines = ["digraph diagram {", "  rankdir=TB;"]
    for s in sorted(diagram.spider_types):
        lines.append('  spider{} [shape=point, xlabel="{}"];'.format(
            s, diagram.spider_types[s]))
    for b, box in enumerate(diagram.boxes):
        lines.append('  box{} [shape=box, label="{}"];'.format(b, box.name))
    wires = list(diagram.wires)
    port = 0
    for i, ob in enumerate(diagram.dom.objects):
        lines.append('  dom{} [shape=plaintext, label="{}"];'.format(i, ob))
        lines.append("  dom{} -> spider{};".format(i, wires[port]))
        port += 1
    for b, box in enumerate(diagram.boxes):
        for ob in box.dom.objects:
            lines.append('  spider{} -> box{} [label="{}"];'.format(
                wires[port], b, ob))
            port += 1
        for ob in box.cod.objects:
            lines.append('  box{} -> spider{} [label="{}"];'.format(
                b, wires[port], ob))
            port += 1
    for i, ob in enumerate(diagram.cod.objects):
        lines.append('  cod{} [shape=plaintext, label="{}"];'.format(i, ob))
        lines.append("  spider{} -> cod{};".format(wires[port], i))
        port += 1
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(diagram):
    if isinstance(diagram, hypergraph.Diagram):
        return _hyper_dot(diagram)
    if isinstance(diagram, monoidal.Diagram):
        return _monoidal_dot(diagram)
    raise TypeError("cannot render {!r} as DOT".format(diagram))
