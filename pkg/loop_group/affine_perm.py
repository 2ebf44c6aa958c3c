"""Affine permutations in window notation and reduced words.

A window (w(1), ..., w(n)) determines w on all of Z by w(j + kn) = w(j) + kn.
The simple reflection s_i swaps i and i+1 modulo n; words are composed with
the rightmost letter applied first.
"""
from typing import Sequence, Tuple

from errors import NotReducedWord

Window = Tuple[int, ...]


def identity(n: int) -> Window:
    return tuple(range(1, n + 1))


def evaluate(window: Window, j: int) -> int:
    n = len(window)
    k, r = divmod(j - 1, n)
    return window[r] + k * n


def simple_reflection(n: int, i: int) -> Window:
    i %= n
    values = list(range(1, n + 1))
    if n == 1:
        return tuple(values)
    if i == 0:
        values[0] = 0
        values[n - 1] = n + 1
    else:
        values[i - 1], values[i] = values[i], values[i - 1]
    return tuple(values)


def compose(u: Window, v: Window) -> Window:
    """u after v"""
    return tuple(evaluate(u, evaluate(v, j)) for j in range(1, len(v) + 1))


def inverse(w: Window) -> Window:
    n = len(w)
    result = [0] * n
    for j in range(1, n + 1):
        k, r = divmod(w[j - 1] - 1, n)
        result[r] = j - k * n
    return tuple(result)


def word_to_window(n: int, word: Sequence[int]) -> Window:
    result = identity(n)
    for letter in word:
        result = compose(result, simple_reflection(n, letter))
    return result


def length(w: Window) -> int:
    """Number of affine inversions"""
    n = len(w)
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += abs((w[j - 1] - w[i - 1]) // n)
    return total


def is_reduced(n: int, word: Sequence[int]) -> bool:
    return length(word_to_window(n, word)) == len(word)


def ensure_reduced(n: int, word: Sequence[int]):
    if not is_reduced(n, word):
        raise NotReducedWord(f"{list(word)} is not reduced for n={n}")
