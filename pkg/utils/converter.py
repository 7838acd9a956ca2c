"""
utils/converter.py

This module contains the byte-level codecs of the matrix and image files, plus
helpers that move bytes to and from disk. Codecs never touch the file system;
repositories pair them with `bytes2file` / `file2bytes`.

Functions:
    - matrix2csv / csv2matrix: Headerless comma-separated text, one row per line.
    - matrix2mat1 / mat12matrix: MAT1 binary (magic, version, dims, little-endian float64 payload).
    - bytes2matrix: Decode either matrix format by sniffing the MAT1 magic.
    - read_pgm / write_pgm: Binary PGM (P5) grayscale images.
    - bytes2file: Writes binary data to a file.
    - file2bytes: Reads binary data from a file.
"""

import struct
from pathlib import Path
from typing import List, Union

import numpy as np

from kernels import as_matrix
from models import DenseMatrix
from utils.errors import FormatError

CSV_FLOAT_FORMAT = "%.17g"

MAT1_MAGIC = b"AWLS"
MAT1_VERSION = 1
MAT1_HEADER = struct.Struct("<4sBQQ")

PGM_MAGIC = b"P5"
PGM_WHITESPACE = b" \t\n\r\v\f"


def matrix2csv(matrix: DenseMatrix) -> bytes:
    """
    Encodes a matrix as headerless CSV with LF line ends. Seventeen
    significant digits make the text round-trip value-exact.
    """
    matrix = as_matrix(matrix, "matrix2csv")
    lines = [",".join(CSV_FLOAT_FORMAT % value for value in row) for row in matrix.tolist()]
    return ("\n".join(lines) + "\n").encode("ascii")


def csv2matrix(source: bytes) -> DenseMatrix:
    """
    Decodes headerless CSV into a matrix.

    Raises:
        FormatError: On empty input, ragged rows, unparsable or non-finite literals.
    """
    rows: List[List[float]] = []
    offset = 0
    for line in source.split(b"\n"):
        line_start, offset = offset, offset + len(line) + 1
        text = line.rstrip(b"\r").strip()
        if not text:
            continue
        try:
            row = [float(token) for token in text.decode("ascii").split(",")]
        except (UnicodeDecodeError, ValueError):
            raise FormatError("csv: malformed number", offset=line_start) from None
        if not all(np.isfinite(row)):
            raise FormatError("csv: non-finite value", offset=line_start)
        if rows and len(row) != len(rows[0]):
            raise FormatError(
                f"csv: row has {len(row)} values, expected {len(rows[0])}",
                offset=line_start,
            )
        rows.append(row)
    if not rows:
        raise FormatError("csv: no rows", offset=0)
    return np.array(rows, dtype=np.float64)


def matrix2mat1(matrix: DenseMatrix) -> bytes:
    matrix = as_matrix(matrix, "matrix2mat1")
    rows, cols = matrix.shape
    header = MAT1_HEADER.pack(MAT1_MAGIC, MAT1_VERSION, rows, cols)
    return header + matrix.astype("<f8").tobytes(order="C")


def mat12matrix(source: bytes) -> DenseMatrix:
    """
    Decodes MAT1 bytes into a matrix.

    Raises:
        FormatError: On bad magic or version, zero dims, a short or oversized payload,
        or non-finite values.
    """
    if len(source) < MAT1_HEADER.size:
        raise FormatError("mat1: truncated header", offset=len(source))
    magic, version, rows, cols = MAT1_HEADER.unpack_from(source)
    if magic != MAT1_MAGIC:
        raise FormatError("mat1: bad magic", offset=0)
    if version != MAT1_VERSION:
        raise FormatError(f"mat1: unsupported version {version}", offset=4)
    if rows == 0 or cols == 0:
        raise FormatError(f"mat1: empty dims {rows}x{cols}", offset=5)

    expected = MAT1_HEADER.size + rows * cols * 8
    if len(source) < expected:
        raise FormatError(
            f"mat1: payload truncated, expected {expected} bytes", offset=len(source)
        )
    if len(source) > expected:
        raise FormatError("mat1: trailing bytes after payload", offset=expected)

    matrix = np.frombuffer(source, dtype="<f8", offset=MAT1_HEADER.size).reshape(rows, cols)
    if not np.isfinite(matrix).all():
        raise FormatError("mat1: non-finite value", offset=MAT1_HEADER.size)
    return matrix.astype(np.float64)


def bytes2matrix(source: bytes) -> DenseMatrix:
    if source.startswith(MAT1_MAGIC):
        return mat12matrix(source)
    return csv2matrix(source)


def _pgm_header_token(source: bytes, pos: int):
    while pos < len(source):
        byte = source[pos : pos + 1]
        if byte == b"#":
            end = source.find(b"\n", pos)
            pos = len(source) if end < 0 else end + 1
        elif byte in PGM_WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < len(source) and source[pos : pos + 1].isdigit():
        pos += 1
    if pos == start:
        raise FormatError("pgm: expected a decimal header field", offset=start)
    return int(source[start:pos]), pos


def read_pgm(source: bytes) -> DenseMatrix:
    """
    Decodes a binary PGM (P5, maxval at most 255) into a height x width matrix
    of raw pixel values.

    Raises:
        FormatError: On bad magic, malformed header, unsupported maxval or truncated payload.
    """
    if source[:2] != PGM_MAGIC:
        raise FormatError("pgm: expected magic P5", offset=0)
    width, pos = _pgm_header_token(source, 2)
    height, pos = _pgm_header_token(source, pos)
    maxval, pos = _pgm_header_token(source, pos)
    if width == 0 or height == 0:
        raise FormatError(f"pgm: empty image {width}x{height}", offset=pos)
    if not 0 < maxval <= 255:
        raise FormatError(f"pgm: unsupported maxval {maxval}", offset=pos)
    if pos >= len(source) or source[pos : pos + 1] not in PGM_WHITESPACE:
        raise FormatError("pgm: missing whitespace after maxval", offset=pos)

    start = pos + 1
    end = start + width * height
    if len(source) < end:
        raise FormatError(
            f"pgm: payload truncated, expected {width * height} bytes", offset=len(source)
        )
    pixels = np.frombuffer(source, dtype=np.uint8, count=width * height, offset=start)
    return pixels.reshape(height, width).astype(np.float64)


def write_pgm(matrix: DenseMatrix) -> bytes:
    """
    Encodes a matrix as P5 with maxval 255. Values are clamped to [0, 255] and
    rounded half away from zero.
    """
    matrix = as_matrix(matrix, "write_pgm")
    height, width = matrix.shape
    pixels = np.floor(np.clip(matrix, 0.0, 255.0) + 0.5).astype(np.uint8)
    return f"P5\n{width} {height}\n255\n".encode("ascii") + pixels.tobytes(order="C")


def bytes2file(source: bytes, filename: Union[str, Path]) -> Path:
    """
    Writes binary data to a file, creating parent directories.

    Parameters:
        source (bytes): The binary data to be written to a file.
        filename (Union[str, Path]): Destination path.

    Returns:
        Path: The path where the data was written.
    """
    path = Path(filename)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(source)
    return path


def file2bytes(filename: Union[str, Path]) -> bytes:
    return Path(filename).read_bytes()
