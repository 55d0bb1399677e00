"""Text formats for instances and graphs.

Instance format (one item per line, ``#`` starts a comment line):

    msp <kappa> <ell>
    g <c1> ... <cell> : <black> <white>

Graph format (DIMACS-flavored, ``c`` starts a comment line):

    p edge <vertices> <edges>
    e <u> <v>

Parsers report the first offense with its 1-based line number and a
machine-readable kind; serializers emit canonical text that parses back to
an equal value.  Kinds used here: missing-header, duplicate-header,
bad-header, bad-line, bad-int, peg-count, color-out-of-range, score-range,
vertex-range, self-loop, duplicate-edge, edge-count.
"""

from __future__ import annotations

from .core import Palette, Score
from .errors import ParseError
from .reduction import Graph
from .solver import MspInstance, ScoredGuess


def _int_field(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError("bad-int", lineno, f"{what} is not an integer: {token!r}") from None


def parse_instance(text: str) -> MspInstance:
    kappa = ell = 0
    have_header = False
    guesses: list[ScoredGuess] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "msp":
            if have_header:
                raise ParseError("duplicate-header", lineno, "second msp header")
            if len(fields) != 3:
                raise ParseError("bad-header", lineno, "expected: msp <kappa> <ell>")
            kappa = _int_field(fields[1], lineno, "kappa")
            ell = _int_field(fields[2], lineno, "ell")
            if kappa < 1 or ell < 1:
                raise ParseError("bad-header", lineno, "kappa and ell must be positive")
            have_header = True
            continue
        if not have_header:
            raise ParseError("missing-header", lineno, "msp header must come first")
        if fields[0] != "g":
            raise ParseError("bad-line", lineno, f"unexpected line start {fields[0]!r}")
        if ":" not in fields:
            raise ParseError("bad-line", lineno, "guess line needs ': <black> <white>'")
        sep = fields.index(":")
        peg_tokens, score_tokens = fields[1:sep], fields[sep + 1:]
        if len(peg_tokens) != ell:
            raise ParseError("peg-count", lineno,
                             f"expected {ell} pegs, got {len(peg_tokens)}")
        if len(score_tokens) != 2:
            raise ParseError("bad-line", lineno, "expected exactly '<black> <white>' after ':'")
        pegs = tuple(_int_field(t, lineno, "peg") for t in peg_tokens)
        for peg in pegs:
            if not 1 <= peg <= kappa:
                raise ParseError("color-out-of-range", lineno,
                                 f"peg {peg} outside 1..{kappa}")
        black = _int_field(score_tokens[0], lineno, "black")
        white = _int_field(score_tokens[1], lineno, "white")
        if black < 0 or white < 0 or black + white > ell:
            raise ParseError("score-range", lineno,
                             f"score ({black}, {white}) impossible for length {ell}")
        guesses.append(ScoredGuess(pegs, Score(black, white)))
    if not have_header:
        raise ParseError("missing-header", len(text.splitlines()) + 1, "no msp header found")
    return MspInstance(Palette(kappa), ell, tuple(guesses))


def serialize_instance(instance: MspInstance) -> str:
    lines = [f"msp {instance.kappa} {instance.length}"]
    for sg in instance.guesses:
        pegs = " ".join(str(p) for p in sg.guess)
        lines.append(f"g {pegs} : {sg.declared.black} {sg.declared.white}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    vertices = declared_edges = 0
    have_header = False
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if have_header:
                raise ParseError("duplicate-header", lineno, "second p header")
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("bad-header", lineno, "expected: p edge <vertices> <edges>")
            vertices = _int_field(fields[2], lineno, "vertex count")
            declared_edges = _int_field(fields[3], lineno, "edge count")
            if vertices < 1 or declared_edges < 0:
                raise ParseError("bad-header", lineno, "vertex count must be positive")
            have_header = True
            continue
        if not have_header:
            raise ParseError("missing-header", lineno, "p header must come first")
        if fields[0] != "e":
            raise ParseError("bad-line", lineno, f"unexpected line start {fields[0]!r}")
        if len(fields) != 3:
            raise ParseError("bad-line", lineno, "expected: e <u> <v>")
        u = _int_field(fields[1], lineno, "endpoint")
        v = _int_field(fields[2], lineno, "endpoint")
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise ParseError("vertex-range", lineno, f"edge ({u}, {v}) outside 1..{vertices}")
        if u == v:
            raise ParseError("self-loop", lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError("duplicate-edge", lineno, f"edge ({u}, {v}) repeats an earlier edge")
        seen.add(key)
        if len(edges) == declared_edges:
            raise ParseError("edge-count", lineno,
                             f"more than the declared {declared_edges} edges")
        edges.append(key)
    last = len(text.splitlines()) + 1
    if not have_header:
        raise ParseError("missing-header", last, "no p header found")
    if len(edges) != declared_edges:
        raise ParseError("edge-count", last,
                         f"declared {declared_edges} edges but found {len(edges)}")
    return Graph(vertices, tuple(edges))


def serialize_graph(graph: Graph) -> str:
    lines = [f"p edge {graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"e {a} {b}" for a, b in graph.edges)
    return "\n".join(lines) + "\n"
