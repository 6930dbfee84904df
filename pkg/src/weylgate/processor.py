"""Deterministic programmable quantum processor.

Three registers take part: a classical tape cursor (the program bus), an
intermediate quantum bus whose orthogonal basis states ``|j>`` select gate
``U_j``, and the quantum data bus. One step prepares ``|j>`` on the
intermediate bus and applies the controlled unitary ``Σ_j |j><j| ⊗ U_j``.

Programs are written in a small language::

    program := stmt (";" stmt)* ";"?
    stmt    := gate-id | "repeat" (gate-id | "{" program "}") integer "times"

for example ``repeat { repeat U5 10 times; repeat U7 20 times } 3 times``.
"""

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ProgramSyntaxError, ValidationError
from .matrix import DEFAULT_TOL, as_matrix, is_unitary

MAX_TAPE = 10 ** 6
KEYWORDS = frozenset({"repeat", "times"})


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Gate:
    name: str


@dataclass(frozen=True)
class Repeat:
    body: tuple
    count: int


@dataclass(frozen=True)
class ProcessorProgram:
    ast: tuple
    source: str = ""

    def __eq__(self, other):
        # programs compare by structure, not by source formatting
        return isinstance(other, ProcessorProgram) and self.ast == other.ast

    def __hash__(self):
        return hash(self.ast)

    def tape_length(self):
        return _length(self.ast)

    def gate_names(self):
        names = set()
        _collect(self.ast, names)
        return names


def _length(nodes):
    total = 0
    for node in nodes:
        total += 1 if isinstance(node, Gate) else node.count * _length(node.body)
    return total


def _collect(nodes, names):
    for node in nodes:
        if isinstance(node, Gate):
            names.add(node.name)
        else:
            _collect(node.body, names)


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9]*)|(\d+)|([{};])|(\S)")


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _tokenize(text):
    tokens = []
    for m in _TOKEN.finditer(text):
        line, col = _position(text, m.start())
        ident, number, punct, bad = m.groups()
        if bad is not None:
            raise ProgramSyntaxError(f"unexpected character {bad!r}", line, col)
        if ident is not None:
            tokens.append((ident if ident in KEYWORDS else "ident", ident, line, col))
        elif number is not None:
            tokens.append(("int", number, line, col))
        else:
            tokens.append((punct, punct, line, col))
    tokens.append(("eof", "", *_position(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            found = tok[1] or "end of input"
            raise ProgramSyntaxError(f"expected {kind}, found {found!r}", tok[2], tok[3])
        self.i += 1
        return tok

    def program(self, closing):
        nodes = []
        while self.peek()[0] != closing:
            nodes.append(self.statement())
            if self.peek()[0] == ";":
                self.i += 1
            elif self.peek()[0] != closing:
                tok = self.peek()
                raise ProgramSyntaxError(f"expected ';', found {tok[1] or 'end of input'!r}", tok[2], tok[3])
        return tuple(nodes)

    def statement(self):
        tok = self.peek()
        if tok[0] == "ident":
            self.i += 1
            return Gate(tok[1])
        if tok[0] == "repeat":
            self.i += 1
            if self.peek()[0] == "{":
                self.i += 1
                body = self.program("}")
                self.take("}")
            else:
                body = (Gate(self.take("ident")[1]),)
            count_tok = self.take("int")
            count = int(count_tok[1])
            if count < 1:
                raise ProgramSyntaxError("repeat count must be at least 1", count_tok[2], count_tok[3])
            self.take("times")
            return Repeat(body, count)
        raise ProgramSyntaxError(f"unexpected {tok[1] or 'end of input'!r}", tok[2], tok[3])


def parse_program(text):
    """Parse program text into a :class:`ProcessorProgram`.

    Raises
    ------
    ProgramSyntaxError
        With 1-based ``line`` and ``column`` of the offending token.
    """
    parser = _Parser(text)
    ast = parser.program("eof")
    return ProcessorProgram(ast=ast, source=text)


def format_program(program):
    """Canonical text for a program; ``parse_program`` inverts it."""
    nodes = program.ast if isinstance(program, ProcessorProgram) else program
    return "; ".join(_format_node(n) for n in nodes)


def _format_node(node):
    if isinstance(node, Gate):
        return node.name
    if len(node.body) == 1 and isinstance(node.body[0], Gate):
        inner = node.body[0].name
    else:
        inner = "{ " + "; ".join(_format_node(n) for n in node.body) + " }"
    return f"repeat {inner} {node.count} times"


def flatten(program, max_tape=MAX_TAPE):
    """Unroll every repeat block into a list of gate ids."""
    nodes = program.ast if isinstance(program, ProcessorProgram) else program
    length = _length(nodes)
    if length > max_tape:
        raise DimensionError(f"tape length {length} exceeds cap {max_tape}")
    tape = []
    _unroll(nodes, tape)
    return tape


def _unroll(nodes, tape):
    for node in nodes:
        if isinstance(node, Gate):
            tape.append(node.name)
        else:
            block = []
            _unroll(node.body, block)
            tape.extend(block * node.count)


# -- simulation ---------------------------------------------------------------

class GateTable:
    """Gate ids mapped to unitaries on the data bus.

    Insertion order fixes the intermediate-bus basis state of each gate.
    """

    def __init__(self, gates, tol=DEFAULT_TOL):
        items = list(gates.items() if hasattr(gates, "items") else gates)
        if not items:
            raise ValidationError("gate table is empty")
        self.ids = tuple(str(k) for k, _ in items)
        mats = [as_matrix(np.array(m, dtype=complex)) for _, m in items]
        d = mats[0].shape[0]
        for k, m in zip(self.ids, mats):
            if m.shape[0] != d:
                raise DimensionError(f"gate {k} has dim {m.shape[0]}, expected {d}")
            if not is_unitary(m, tol):
                raise ValidationError(f"gate {k} is not unitary")
            m.setflags(write=False)
        self.unitaries = tuple(mats)
        self._index = {k: i for i, k in enumerate(self.ids)}

    @property
    def data_dim(self):
        return self.unitaries[0].shape[0]

    @property
    def bus_dim(self):
        return len(self.ids)

    def index(self, gate_id):
        try:
            return self._index[gate_id]
        except KeyError:
            raise KeyError(f"unknown gate id {gate_id!r}") from None

    def __getitem__(self, gate_id):
        return self.unitaries[self.index(gate_id)]


def controlled_unitary(table):
    """Block-diagonal ``Σ_j |j><j| ⊗ U_j`` of size ``M·D``."""
    m, d = table.bus_dim, table.data_dim
    out = np.zeros((m * d, m * d), dtype=complex)
    for j, u in enumerate(table.unitaries):
        out[j * d:(j + 1) * d, j * d:(j + 1) * d] = u
    return out


def _as_state(vec, dim, tol=DEFAULT_TOL):
    v = np.asarray(vec, dtype=complex).ravel()
    if v.shape != (dim,):
        raise DimensionError(f"state has {v.size} amplitudes, expected {dim}")
    if abs(np.linalg.norm(v) - 1.0) > tol:
        raise ValidationError("state is not normalised")
    return v


def run(program, table, data_in):
    """Execute ``program`` on the data register.

    Each tape entry puts the intermediate bus in the matching basis state,
    applies :func:`controlled_unitary` to the joint state and reads the data
    register back out. Returns the final data state.
    """
    d, m = table.data_dim, table.bus_dim
    psi = _as_state(data_in, d)
    tape = flatten(program)
    cu = controlled_unitary(table)
    for gate_id in tape:
        j = table.index(gate_id)
        joint = np.zeros(m * d, dtype=complex)
        joint[j * d:(j + 1) * d] = psi
        joint = cu @ joint
        # orthogonal program states leave the bus in |j>, so no amplitude leaks
        psi = joint[j * d:(j + 1) * d]
    return psi


def direct_product(program, table):
    """``U_{j_p} ... U_{j_1}`` for the flattened tape ``j_1, ..., j_p``."""
    out = np.eye(table.data_dim, dtype=complex)
    for gate_id in flatten(program):
        out = table[gate_id] @ out
    return out


def entanglement_entropy(state, dims):
    """Base-2 entropy of entanglement for a pure state on ``dims[0] x dims[1]``."""
    s = np.linalg.svd(np.asarray(state).reshape(dims), compute_uv=False)
    p = s ** 2
    p = p[p > 1e-15]
    return float(max(0.0, -np.sum(p * np.log2(p))))


def superposition_malfunction(table, j, k, alpha, beta, data_in, tol=1e-10):
    """Program/data entanglement caused by a superposed program state.

    Applies the controlled unitary to ``(α|j> + β|k>) ⊗ data_in`` and returns
    the entanglement entropy in bits between the intermediate and data buses.
    """
    if j == k:
        raise ValidationError("superposition needs two distinct program states")
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > tol:
        raise ValidationError("amplitudes are not normalised")
    d, m = table.data_dim, table.bus_dim
    psi = _as_state(data_in, d)
    bus = np.zeros(m, dtype=complex)
    bus[table.index(j)] += alpha
    bus[table.index(k)] += beta
    joint = controlled_unitary(table) @ np.kron(bus, psi)
    return entanglement_entropy(joint, (m, d))


def max_entropy(table):
    return math.log2(min(table.bus_dim, table.data_dim))
