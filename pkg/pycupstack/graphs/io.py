"""Reading and writing graphs

The text format is one line ``n m`` followed by m lines ``u v`` with 0-based vertex
indices. Blank lines and lines starting with ``#`` are ignored.
"""

import os

from ..exceptions import FormatError
from .base import Graph
from .families import from_shorthand


def format_graph(g):
    """The text form of g with edges in sorted order

    :rtype: str
    """
    lines = ["{} {}".format(g.n, g.m)]
    lines.extend("{} {}".format(u, v) for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text, name=None):
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty graph description")
    try:
        header = [int(x) for x in rows[0]]
        if len(header) != 2:
            raise ValueError("header must be 'n m'")
        n, m = header
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise ValueError("edge line {!r} must have two entries".format(" ".join(row)))
            edges.append((int(row[0]), int(row[1])))
    except ValueError as e:
        raise FormatError("malformed graph description: {}".format(e))
    if len(edges) != m:
        raise FormatError("header announces {} edges, found {}".format(m, len(edges)))
    return Graph(n, edges, name=name)


def write_graph(g, destination):
    """Write g in the edge list format

    :param destination: A path or a writable text file object
    """
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "w") as f:
            f.write(format_graph(g))
    else:
        destination.write(format_graph(g))


def read_graph(source):
    """Read a graph in the edge list format

    :param source: A path or a readable text file object
    :rtype: :class:`pycupstack.graphs.base.Graph`
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source) as f:
            return parse_graph(f.read(), name=os.path.basename(str(source)))
    return parse_graph(source.read())


def load_graph(argument):
    """Resolve a command line graph argument, either a shorthand such as ``q4`` or a file path"""
    g = from_shorthand(argument)
    if g is not None:
        return g
    if not os.path.exists(argument):
        raise FormatError("{!r} is neither a graph shorthand nor an existing file".format(argument))
    return read_graph(argument)


def to_dot(g, highlight=()):
    """A Graphviz DOT description of g for external rendering

    :param highlight: Vertices drawn filled
    :rtype: str
    """
    highlight = set(highlight)
    lines = ["graph {} {{".format('"{}"'.format(g.name) if g.name else "G")]
    for v in range(g.n):
        attributes = 'label="{}"'.format(str(g.label(v)).replace('"', "'"))
        if v in highlight:
            attributes += ", style=filled"
        lines.append("  {} [{}];".format(v, attributes))
    lines.extend("  {} -- {};".format(u, v) for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
