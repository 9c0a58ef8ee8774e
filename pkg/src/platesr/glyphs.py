"""Bundled 66-symbol glyph atlas: 10 digits, 26 Latin letters, 30 Hangul syllables.

Digits and Latin letters are classic 5x7 dot-matrix patterns. The Hangul
syllables used on Korean plates are composed from consonant/vowel stroke
patterns on a 7x10 grid. Every glyph is exposed as a boolean bitmap; the
renderer scales the inked region, so bitmaps only need to be distinct and
roughly centered, not typographically exact.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

GLYPH_W = 7
GLYPH_H = 10

_DOT_MATRIX = {
    "0": (".###.", "#...#", "#..##", "#.#.#", "##..#", "#...#", ".###."),
    "1": ("..#..", ".##..", "..#..", "..#..", "..#..", "..#..", ".###."),
    "2": (".###.", "#...#", "....#", "...#.", "..#..", ".#...", "#####"),
    "3": (".###.", "#...#", "....#", "..##.", "....#", "#...#", ".###."),
    "4": ("...#.", "..##.", ".#.#.", "#..#.", "#####", "...#.", "...#."),
    "5": ("#####", "#....", "####.", "....#", "....#", "#...#", ".###."),
    "6": ("..##.", ".#...", "#....", "####.", "#...#", "#...#", ".###."),
    "7": ("#####", "....#", "...#.", "..#..", ".#...", ".#...", ".#..."),
    "8": (".###.", "#...#", "#...#", ".###.", "#...#", "#...#", ".###."),
    "9": (".###.", "#...#", "#...#", ".####", "....#", "...#.", ".##.."),
    "A": ("..#..", ".#.#.", "#...#", "#...#", "#####", "#...#", "#...#"),
    "B": ("####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."),
    "C": (".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."),
    "D": ("####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."),
    "E": ("#####", "#....", "#....", "####.", "#....", "#....", "#####"),
    "F": ("#####", "#....", "#....", "####.", "#....", "#....", "#...."),
    "G": (".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".####"),
    "H": ("#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"),
    "I": (".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###."),
    "J": ("..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."),
    "K": ("#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"),
    "L": ("#....", "#....", "#....", "#....", "#....", "#....", "#####"),
    "M": ("#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"),
    "N": ("#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#", "#...#"),
    "O": (".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."),
    "P": ("####.", "#...#", "#...#", "####.", "#....", "#....", "#...."),
    "Q": (".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"),
    "R": ("####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"),
    "S": (".####", "#....", "#....", ".###.", "....#", "....#", "####."),
    "T": ("#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."),
    "U": ("#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."),
    "V": ("#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."),
    "W": ("#...#", "#...#", "#...#", "#.#.#", "#.#.#", "##.##", "#...#"),
    "X": ("#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"),
    "Y": ("#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."),
    "Z": ("#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"),
}

# 3x4 consonant strokes (jamo), keyed by romanization.
_CONSONANTS = {
    "g": ("###", "..#", "..#", "..#"),
    "n": ("#..", "#..", "#..", "###"),
    "d": ("###", "#..", "#..", "###"),
    "r": ("###", ".##", "##.", "###"),
    "m": ("###", "#.#", "#.#", "###"),
    "b": ("#.#", "###", "#.#", "###"),
    "s": (".#.", ".#.", "#.#", "#.#"),
    "x": (".#.", "#.#", "#.#", ".#."),  # ieung
    "j": ("###", ".#.", ".#.", "#.#"),
}

# (display char, consonant, vowel) for the 30 plate syllables.
_HANGUL = [
    ("가", "g", "a"), ("나", "n", "a"), ("다", "d", "a"), ("라", "r", "a"),
    ("마", "m", "a"),
    ("거", "g", "eo"), ("너", "n", "eo"), ("더", "d", "eo"), ("러", "r", "eo"),
    ("머", "m", "eo"), ("버", "b", "eo"), ("서", "s", "eo"), ("어", "x", "eo"),
    ("저", "j", "eo"),
    ("고", "g", "o"), ("노", "n", "o"), ("도", "d", "o"), ("로", "r", "o"),
    ("모", "m", "o"), ("보", "b", "o"), ("소", "s", "o"), ("오", "x", "o"),
    ("조", "j", "o"),
    ("구", "g", "u"), ("누", "n", "u"), ("두", "d", "u"), ("루", "r", "u"),
    ("무", "m", "u"), ("부", "b", "u"), ("수", "s", "u"),
]

ALPHABET: tuple[str, ...] = tuple("0123456789") + tuple(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
) + tuple(ch for ch, _, _ in _HANGUL)

N_CLASSES = len(ALPHABET)


def _from_rows(rows) -> np.ndarray:
    return np.array([[c == "#" for c in row] for row in rows], dtype=bool)


def _blit(canvas: np.ndarray, bitmap: np.ndarray, row: int, col: int) -> None:
    h, w = bitmap.shape
    canvas[row:row + h, col:col + w] |= bitmap


def _hangul_bitmap(cons: str, vowel: str) -> np.ndarray:
    g = np.zeros((GLYPH_H, GLYPH_W), dtype=bool)
    c = _from_rows(_CONSONANTS[cons])
    if vowel in ("a", "eo"):
        _blit(g, c, 2, 0)
        g[0:GLYPH_H, 5] = True  # vertical vowel bar
        if vowel == "a":
            g[4, 6] = True  # arm to the right
        else:
            g[4, 4] = True  # arm to the left
    elif vowel == "o":
        _blit(g, c, 0, 2)
        g[5:8, 3] = True  # stem above bar
        g[8, 0:GLYPH_W] = True
    elif vowel == "u":
        _blit(g, c, 0, 2)
        g[5, 0:GLYPH_W] = True
        g[6:10, 3] = True  # stem below bar
    else:
        raise ValueError(f"unknown vowel {vowel!r}")
    return g


@lru_cache(maxsize=1)
def atlas() -> tuple[np.ndarray, ...]:
    """Bitmap for each class id, cropped to its inked bounding box."""
    maps = []
    for ch in ALPHABET[:36]:
        g = np.zeros((GLYPH_H, GLYPH_W), dtype=bool)
        _blit(g, _from_rows(_DOT_MATRIX[ch]), 1, 1)
        maps.append(g)
    for _, cons, vowel in _HANGUL:
        maps.append(_hangul_bitmap(cons, vowel))
    return tuple(_crop_ink(g) for g in maps)


def _crop_ink(g: np.ndarray) -> np.ndarray:
    rows = np.flatnonzero(g.any(axis=1))
    cols = np.flatnonzero(g.any(axis=0))
    return g[rows[0]:rows[-1] + 1, cols[0]:cols[-1] + 1]


def glyph_bitmap(class_id: int) -> np.ndarray:
    """Ink-cropped boolean bitmap for a class id in [0, 66)."""
    if not 0 <= class_id < N_CLASSES:
        raise ValueError(f"class_id {class_id} outside [0, {N_CLASSES})")
    return atlas()[class_id]


def to_text(class_ids) -> str:
    """Map a sequence of class ids to their display characters."""
    return "".join(ALPHABET[int(c)] for c in class_ids)
