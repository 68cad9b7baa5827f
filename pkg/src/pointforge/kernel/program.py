"""Flat postfix programs the evaluation kernels interpret.

A program is the compiled form of one equation: a row per instruction,
``(opcode, operand, sample_index)``.  The numeric tables below are the
contract between the pure lane and ``_native.pyx``, which hardcodes the
same numbering in its C switches.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

OP_ATOM = 0  # push atom value; operand = atom code
OP_APPLY = 1  # v = pop(); push samples[sample_index] * func(v); operand = func code
OP_BINOP = 2  # r = pop(); l = pop(); push l <op> r; operand = op code

# Function codes, in the order of the deterministic-function table.
FUNC_TANH = 0
FUNC_COS = 1
FUNC_SIN = 2
FUNC_IDENTITY = 3
FUNC_ABS = 4
FUNC_CEIL = 5
FUNC_FLOOR = 6
FUNC_TAN = 7
FUNC_ERF = 8
FUNC_SQRT_ABS = 9
FUNC_LOG_ABS1 = 10
FUNC_ACOSH_ABS1 = 11
FUNC_ASINH = 12

# Argument-atom codes, in table order.
ATOM_XY = 0
ATOM_X = 1
ATOM_Y = 2
ATOM_INV_X = 3
ATOM_INV_Y = 4
ATOM_X_OVER_Y = 5
ATOM_Y_MINUS_X = 6
ATOM_X_MINUS_Y = 7
ATOM_X_PLUS_Y = 8
ATOM_X_CUBED = 9
ATOM_Y_CUBED = 10
ATOM_X_SQUARED = 11
ATOM_Y_SQUARED = 12
ATOM_X2_Y = 13
ATOM_Y2_X = 14
ATOM_X2_PLUS_Y2 = 15
ATOM_Y2_MINUS_X2 = 16
ATOM_X2_Y3 = 17
ATOM_X3_Y2 = 18
ATOM_X_Y3 = 19
ATOM_Y_X3 = 20

BOP_ADD = 0
BOP_SUB = 1
BOP_MUL = 2
BOP_DIV = 3

MAX_STACK = 16  # postfix depth never exceeds the precedence-level count + 1


@dataclass(frozen=True)
class Program:
    """Compiled equation: instruction rows, draw count, distribution code."""

    codes: np.ndarray  # int32, shape (n, 3), C-contiguous
    rows: tuple[tuple[int, int, int], ...]  # same content for the pure lane
    n_samples: int
    dist: int

    @staticmethod
    def from_rows(rows, n_samples: int, dist: int) -> "Program":
        codes = np.ascontiguousarray(np.array(rows, dtype=np.int32).reshape(-1, 3))
        return Program(codes=codes, rows=tuple(rows), n_samples=n_samples, dist=dist)
