"""Tag-based font retrieval: corpus synthesis, staged training, evaluation, serving."""

__version__ = "0.1.0"

GLYPHS = tuple("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
