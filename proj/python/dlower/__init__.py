"""Exact double lowering computations over the rationals."""

import json
from fractions import Fraction

from . import _core
from ._core import InputError, InternalDisagreement

__all__ = [
    "InputError",
    "InternalDisagreement",
    "classify",
    "verify",
    "lowering_dim",
    "data_matrices",
    "qracah_matrices",
    "qracah_suite",
    "gen_corpus",
    "to_fraction",
]


def _text(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _seq(values):
    return [_text(v) for v in values]


def to_fraction(text):
    return Fraction(text)


def classify(a, b):
    return json.loads(_core.classify(_seq(a), _seq(b)))


def verify(a, b):
    return json.loads(_core.verify(_seq(a), _seq(b)))


def lowering_dim(a, b):
    return _core.lowering_dim(_seq(a), _seq(b))


def data_matrices(a, b):
    return json.loads(_core.data_matrices(_seq(a), _seq(b)))


def qracah_matrices(q, a, b, n, basis="tau"):
    return json.loads(_core.qracah_matrices(_text(q), _text(a), _text(b), n, basis))


def qracah_suite(q, a, b, n):
    return json.loads(_core.qracah_suite(_text(q), _text(a), _text(b), n))


def gen_corpus(seed, count, max_n=10, kinds=(), min_n=3):
    return json.loads(_core.gen_corpus(seed, count, max_n, list(kinds), min_n))
