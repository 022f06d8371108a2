# src/reductions/words.py
from src.arith.field import FieldTag
from src.linalg.matrix import Matrix
from src.problems import check_binary


def binary_value(word: str) -> int:
    """(w)_2, with the empty word worth 0."""
    return int(word, 2) if word else 0


def word_matrix(word: str, tag: FieldTag = FieldTag.rational()) -> Matrix:
    """T_w = [[2^|w| - (w)_2, (w)_2], [2^|w| - (w)_2 - 1, (w)_2 + 1]], so that T_v T_w = T_{wv}."""
    check_binary(word)
    top, value = 2 ** len(word), binary_value(word)
    return Matrix.from_rows(tag, [[top - value, value], [top - value - 1, value + 1]])
