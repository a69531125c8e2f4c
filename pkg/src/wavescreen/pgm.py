"""PGM (P2 ASCII / P5 binary) image reading and writing, maxval 255 only."""

import numpy as np

from .validation import as_image


class PgmError(ValueError):
    """Raised for malformed, truncated, or unsupported PGM data."""


def _tokenize_header(data, count):
    """First `count` whitespace-separated tokens, honoring '#' comments.

    Returns (tokens, offset of the byte right after the last token).
    """
    tokens = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i:i + 1].isspace():
            i += 1
        if i < n and data[i:i + 1] == b"#":
            while i < n and data[i:i + 1] != b"\n":
                i += 1
            continue
        start = i
        while i < n and not data[i:i + 1].isspace() and data[i:i + 1] != b"#":
            i += 1
        if i == start:
            raise PgmError("malformed header: ran out of data")
        tokens.append(data[start:i])
    return tokens, i


def read_pgm(data: bytes):
    """Parse PGM bytes into a 2D float array of integer values 0..255."""
    if not isinstance(data, (bytes, bytearray)):
        raise PgmError("expected raw PGM bytes")
    try:
        (magic, w_tok, h_tok, maxval_tok), offset = _tokenize_header(bytes(data), 4)
    except PgmError:
        raise PgmError("malformed header: expected magic, dims and maxval")
    if magic not in (b"P2", b"P5"):
        raise PgmError(f"malformed header: unknown magic {magic!r}")
    try:
        width, height, maxval = int(w_tok), int(h_tok), int(maxval_tok)
    except ValueError:
        raise PgmError("malformed header: non-integer dimensions or maxval")
    if width < 1 or height < 1:
        raise PgmError(f"malformed header: bad dimensions {width}x{height}")
    if maxval != 255:
        raise PgmError(f"unsupported maxval {maxval}; only 255 is handled")

    count = width * height
    if magic == b"P2":
        fields = data[offset:].split()
        if len(fields) < count:
            raise PgmError(
                f"truncated payload: expected {count} pixels, got {len(fields)}"
            )
        if len(fields) > count:
            raise PgmError(f"malformed payload: {len(fields) - count} extra tokens")
        try:
            pixels = np.array([int(f) for f in fields], dtype=np.int64)
        except ValueError:
            raise PgmError("malformed payload: non-integer pixel")
    else:
        payload = data[offset + 1: offset + 1 + count]  # one separator byte
        if len(payload) < count:
            raise PgmError(
                f"truncated payload: expected {count} bytes, got {len(payload)}"
            )
        if len(data) > offset + 1 + count:
            raise PgmError("malformed payload: trailing bytes after pixels")
        pixels = np.frombuffer(payload, dtype=np.uint8).astype(np.int64)
    if pixels.min() < 0 or pixels.max() > 255:
        raise PgmError("malformed payload: pixel outside 0..255")
    return pixels.reshape(height, width).astype(np.float64)


def write_pgm(image, variant="P5"):
    """Serialize a 2D array (clamped and rounded to 0..255) as PGM bytes."""
    img = as_image(image)
    if variant not in ("P2", "P5"):
        raise ValueError(f"variant must be 'P2' or 'P5', got {variant!r}")
    pixels = np.clip(np.rint(img), 0, 255).astype(np.uint8)
    height, width = pixels.shape
    header = f"{variant}\n{width} {height}\n255\n".encode("ascii")
    if variant == "P2":
        body = "\n".join(" ".join(str(v) for v in row) for row in pixels)
        return header + body.encode("ascii") + b"\n"
    return header + pixels.tobytes()
