"""Inline constructor grammar for rings, modules and endomorphisms.

    spec  := NAME [ "(" spec ("," spec)* ")" ] | INTEGER
    NAME  := letter (letter | digit | "_" | "-")*

``matrix(2, zmod(3))`` and ``nagata(product(zmod(2),zmod(2)), self, swap)``
are typical inputs.  The same vocabulary is accepted as nested mappings
(``{"matrix": [2, "zmod(3)"]}``) for file-based configs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import InvalidSpec, ParseError

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_\-]*)|(?P<int>-?\d+)|(?P<punct>[(),]))")


@dataclass
class Node:
    name: str
    args: list = field(default_factory=list)

    def __str__(self):
        if not self.args:
            return self.name
        return f"{self.name}(" + ",".join(str(a) for a in self.args) + ")"


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def parse_spec(text):
    """Parse inline spec text into a :class:`Node` tree (ints stay ints)."""
    if isinstance(text, (Node, int)):
        return text
    if isinstance(text, dict):
        return _from_mapping(text)
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:pos + 1]!r}", *_position(text, pos))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    if not tokens:
        raise ParseError("empty spec", 1, 1)
    node, i = _parse_expr(text, tokens, 0)
    if i != len(tokens):
        raise ParseError("trailing input", *_position(text, tokens[i][2]))
    return node


def _parse_expr(text, tokens, i):
    if i >= len(tokens):
        raise ParseError("unexpected end of spec", *_position(text, len(text)))
    kind, value, offset = tokens[i]
    if kind == "int":
        return int(value), i + 1
    if kind != "name":
        raise ParseError(f"unexpected {value!r}", *_position(text, offset))
    node = Node(value.replace("_", "-"))
    i += 1
    if i < len(tokens) and tokens[i][1] == "(":
        i += 1
        while True:
            arg, i = _parse_expr(text, tokens, i)
            node.args.append(arg)
            if i >= len(tokens):
                raise ParseError("missing ')'", *_position(text, len(text)))
            if tokens[i][1] == ",":
                i += 1
                continue
            if tokens[i][1] == ")":
                return node, i + 1
            raise ParseError(f"unexpected {tokens[i][1]!r}", *_position(text, tokens[i][2]))
    return node, i


def _from_mapping(obj):
    if isinstance(obj, str):
        return parse_spec(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        if len(obj) != 1:
            raise InvalidSpec(f"constructor mapping must have exactly one key, got {list(obj)}")
        (name, args), = obj.items()
        if args is None:
            args = []
        elif not isinstance(args, list):
            args = [args]
        return Node(name.replace("_", "-"), [_from_mapping(a) for a in args])
    raise InvalidSpec(f"cannot read spec from {obj!r}")


def _arity(node, *counts):
    if len(node.args) not in counts:
        want = " or ".join(map(str, counts))
        raise InvalidSpec(f"{node.name} takes {want} argument(s), got {len(node.args)}")


def _int_arg(node, i):
    v = node.args[i]
    if not isinstance(v, int):
        raise InvalidSpec(f"{node.name}: argument {i + 1} must be an integer")
    return v


def build_ring(spec):
    """Instantiate (without verifying) the ring described by ``spec``."""
    from . import rings

    if isinstance(spec, rings.Ring):
        return spec
    node = parse_spec(spec)
    if isinstance(node, int):
        raise InvalidSpec(f"expected a ring constructor, got {node}")
    name = node.name
    if name == "zmod":
        _arity(node, 1)
        return rings.ZMod(_int_arg(node, 0))
    if name == "product":
        if len(node.args) < 2:
            raise InvalidSpec("product takes at least two rings")
        return rings.ProductRing([build_ring(a) for a in node.args])
    if name in ("matrix", "triangular"):
        _arity(node, 2)
        cls = rings.MatrixRing if name == "matrix" else rings.TriangularRing
        return cls(_int_arg(node, 0), build_ring(node.args[1]))
    if name == "integers":
        _arity(node, 0)
        return rings.IntegerRing()
    if name == "congruence-pairs":
        _arity(node, 1)
        return rings.CongruencePairs(_int_arg(node, 0))
    if name == "poly":
        _arity(node, 1)
        return rings.PolyRing(build_ring(node.args[0]))
    if name == "nagata":
        _arity(node, 3)
        from .endo import construct_endomorphism
        from .modules import NagataRing, construct_module
        base = build_ring(node.args[0])
        module = construct_module(base, node.args[1])
        endo = construct_endomorphism(base, str(node.args[2]))
        from .errors import ContextMismatch
        if module.ring is not base:
            raise ContextMismatch("module over a different ring")
        return NagataRing(base, module, endo)
    raise InvalidSpec(f"unknown ring constructor {name!r}")


def build_module(ring, spec):
    from . import modules

    node = parse_spec(spec)
    if isinstance(node, int):
        raise InvalidSpec(f"expected a module constructor, got {node}")
    if node.name in ("self", "ring-as-module"):
        _arity(node, 0)
        return modules.SelfModule(ring)
    if node.name in ("power", "ring-power"):
        _arity(node, 1)
        return modules.PowerModule(ring, _int_arg(node, 0))
    if node.name == "cyclic":
        if not node.args:
            raise InvalidSpec("cyclic takes at least one modulus")
        return modules.CyclicModule(ring, [_int_arg(node, i) for i in range(len(node.args))])
    raise InvalidSpec(f"unknown module constructor {node.name!r}")
