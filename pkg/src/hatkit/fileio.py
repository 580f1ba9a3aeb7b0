"""File formats: edge-list text, graph6/sparse6, permutation JSON bundles,
DOT export.

Edge-list format: first line ``n m``, then m lines ``u v``.
Generator files: one JSON image list per line.
Bundle JSON: {"n": ..., "edges": [[u, v], ...], "generators": [[...], ...],
"params": {...}} with generators/params optional.
"""

from __future__ import annotations

import json
from typing import Optional, Tuple

from .errors import BadPermutationError, ParseError
from .graphcore import Graph, build_graph
from .perm import GroupByGenerators, Permutation


# -- edge lists ----------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge-list file")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ParseError(f"bad header {lines[0]!r}", line=1)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for k, ln in enumerate(lines[1:], start=2):
        try:
            u, v = (int(tok) for tok in ln.split())
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}", line=k)
        edges.append((u, v))
    return build_graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- graph6 / sparse6 ----------------------------------------------------------

def _g6_encode_size(n: int) -> bytes:
    if n < 0 or n > 258047:
        raise ParseError(f"graph6 size {n} out of supported range")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def _g6_decode_size(data: bytes) -> Tuple[int, bytes]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) < 4:
        raise ParseError("truncated graph6 size")
    if data[1] == 126:
        raise ParseError("graph6 sizes above 258047 are unsupported")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, data[4:]


def graph6_encode(g: Graph) -> str:
    """Standard graph6 bit packing of the upper triangle, column order."""
    bits = []
    for v in range(g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6 != 0:
        bits.append(0)
    body = bytearray(_g6_encode_size(g.n))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        body.append(value + 63)
    return body.decode("ascii")


def graph6_decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if s.startswith(":"):
        return sparse6_decode(s)
    data = s.encode("ascii")
    n, rest = _g6_decode_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) < need:
        raise ParseError(f"truncated graph6 body: need {need} bytes, got {len(rest)}")
    bits = []
    for byte in rest[:need]:
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 byte {byte}")
        value = byte - 63
        bits.extend((value >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for v in range(n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return build_graph(n, edges)


def sparse6_decode(s: str) -> Graph:
    """Decode the sparse6 format (':'-prefixed strings)."""
    s = s.strip()
    if s.startswith(">>sparse6<<"):
        s = s[len(">>sparse6<<"):]
    if not s.startswith(":"):
        raise ParseError("sparse6 strings start with ':'")
    data = s[1:].encode("ascii")
    n, rest = _g6_decode_size(data)
    k = max(1, (n - 1).bit_length())
    bits = []
    for byte in rest:
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid sparse6 byte {byte}")
        value = byte - 63
        bits.extend((value >> i) & 1 for i in range(5, -1, -1))
    edges = set()
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for i in range(pos + 1, pos + 1 + k):
            x = (x << 1) | bits[i]
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x != v:  # sparse6 may encode loops/multi-edges; we reject later
            edges.add((x, v) if x < v else (v, x))
        else:
            edges.add((x, v))  # loop; build_graph will reject
    return build_graph(n, sorted(edges))


# -- permutations and bundles --------------------------------------------------

def parse_generator_lines(text: str, degree: Optional[int] = None) -> GroupByGenerators:
    gens = []
    for k, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            images = json.loads(ln)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad image list: {exc}", line=k)
        if (not isinstance(images, list)
                or not all(isinstance(x, int) for x in images)):
            raise BadPermutationError(f"line {k}: expected a list of integers")
        gens.append(Permutation(tuple(images)))
    if not gens and degree is None:
        raise ParseError("no generators and no degree given")
    return GroupByGenerators(tuple(gens), degree=degree or gens[0].degree)


def bundle_to_json(g: Graph, group: Optional[GroupByGenerators] = None,
                   params: Optional[dict] = None) -> str:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if group is not None:
        doc["generators"] = [list(p.images) for p in group.generators]
    if params:
        doc["params"] = params
    return json.dumps(doc, indent=2, sort_keys=True)


def bundle_from_json(text: str):
    """Returns (Graph, Optional[GroupByGenerators], params dict)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad bundle JSON: {exc}")
    if "n" not in doc or "edges" not in doc:
        raise ParseError("bundle JSON needs 'n' and 'edges'")
    g = build_graph(doc["n"], [tuple(e) for e in doc["edges"]])
    group = None
    if "generators" in doc:
        gens = []
        for images in doc["generators"]:
            if len(images) != g.n:
                raise BadPermutationError(
                    f"generator degree {len(images)} != n = {g.n}")
            gens.append(Permutation(tuple(images)))
        group = GroupByGenerators(tuple(gens), degree=g.n)
    return g, group, doc.get("params", {})


# -- DOT export ----------------------------------------------------------------

def to_dot(g: Graph, name: str = "G", labels: Optional[dict] = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels.get(v) if labels else None
        lines.append(f'  {v} [label="{label}"];' if label is not None else f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
