"""Text format for trees, plus a DOT export.

Grammar:  tree := "*" | "(" tree { "," tree } ")"

A leaf is "*" rather than "()", so a parenthesized node has at least one
child by construction.  Whitespace between tokens is ignored.  Serialization
is canonical (children in ascending Matula order) and round-trips exactly;
this is the wire format for the CLI and for every test fixture.
"""

from .errors import TreeSyntaxError
from .trees import Tree, join, leaf

_WHITESPACE = " \t\r\n"


def serialize(t: Tree) -> str:
    """Canonical text for t; parse(serialize(t)) == t."""
    if not t.children:
        return "*"
    return "(" + ",".join(serialize(c) for c in t.children) + ")"


def parse(text: str) -> Tree:
    """Parse tree text into its canonical Tree.

    Child order in the input is irrelevant; the result is canonical.  Raises
    TreeSyntaxError carrying the byte offset and the expected-token set.
    """
    pos = _skip_ws(text, 0)
    tree, pos = _parse_tree(text, pos)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise TreeSyntaxError(
            f"trailing input at offset {pos}", pos, {"end of input"}
        )
    return tree


def _skip_ws(s, i):
    while i < len(s) and s[i] in _WHITESPACE:
        i += 1
    return i


def _parse_tree(s, i):
    if i >= len(s):
        raise TreeSyntaxError(f"unexpected end of input at offset {i}", i, {"*", "("})
    c = s[i]
    if c == "*":
        return leaf(), i + 1
    if c != "(":
        raise TreeSyntaxError(f"unexpected {c!r} at offset {i}", i, {"*", "("})
    children = []
    i += 1
    while True:
        i = _skip_ws(s, i)
        child, i = _parse_tree(s, i)
        children.append(child)
        i = _skip_ws(s, i)
        if i >= len(s):
            raise TreeSyntaxError(
                f"unexpected end of input at offset {i}", i, {",", ")"}
            )
        if s[i] == ",":
            i += 1
            continue
        if s[i] == ")":
            # Input child order is free-form; join restores canonical order.
            return join(*children), i + 1
        raise TreeSyntaxError(f"unexpected {s[i]!r} at offset {i}", i, {",", ")"})


def to_dot(t: Tree, name: str = "tree") -> str:
    """Graphviz DOT text: one node per vertex, edges parent to child, nodes
    numbered by canonical depth-first order (root is n0)."""
    lines = [f"digraph {name} {{"]
    counter = [0]

    def emit(node):
        uid = counter[0]
        counter[0] += 1
        lines.append(f'  n{uid} [label="{uid}"];')
        for child in node.children:
            cid = emit(child)
            lines.append(f"  n{uid} -> n{cid};")
        return uid

    emit(t)
    lines.append("}")
    return "\n".join(lines) + "\n"
