"""Minimal OpenEXR 2 codec: single-part scanline images, FLOAT channels,
no compression.

Only the subset this package produces is supported; the reader rejects
anything else (tiled/deep/multipart files, compressed scanlines, non-FLOAT
pixel types, unexpected channel sets) with a FormatError instead of guessing.
Channel records are stored in the alphabetical order the format requires, so
an RGBA image is laid out A, B, G, R on disk.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import FormatError, InvalidArgumentError

_MAGIC = 20000630
_VERSION = 2
# version-field flag bits that change the file layout
_FLAG_TILED = 0x200
_FLAG_DEEP = 0x800
_FLAG_MULTIPART = 0x1000

_PT_UINT, _PT_HALF, _PT_FLOAT = 0, 1, 2

_CHANNELS = ("R", "G", "B", "A")


def _attr(name: str, type_name: str, value: bytes) -> bytes:
    return (name.encode("ascii") + b"\0" + type_name.encode("ascii") + b"\0"
            + struct.pack("<i", len(value)) + value)


def _chlist(names: list[str]) -> bytes:
    out = b""
    for name in sorted(names):
        out += name.encode("ascii") + b"\0"
        out += struct.pack("<iBBBBii", _PT_FLOAT, 0, 0, 0, 0, 1, 1)
    return out + b"\0"


def write_rgba(path: str | Path, r: np.ndarray, g: np.ndarray,
               b: np.ndarray, a: np.ndarray) -> None:
    """Write four float32 planes of identical (height, width) shape."""
    planes = {}
    shape = None
    for name, plane in zip(_CHANNELS, (r, g, b, a)):
        arr = np.asarray(plane, dtype=np.float32)
        if arr.ndim != 2 or arr.size == 0:
            raise InvalidArgumentError(f"channel {name}: expected a non-empty 2D array")
        if shape is None:
            shape = arr.shape
        elif arr.shape != shape:
            raise InvalidArgumentError("all channels must share one shape")
        if not np.all(np.isfinite(arr)):
            raise InvalidArgumentError(f"channel {name}: non-finite values are not writable")
        planes[name] = arr
    h, w = shape

    header = struct.pack("<ii", _MAGIC, _VERSION)
    header += _attr("channels", "chlist", _chlist(list(_CHANNELS)))
    header += _attr("compression", "compression", b"\0")  # NO_COMPRESSION
    box = struct.pack("<iiii", 0, 0, w - 1, h - 1)
    header += _attr("dataWindow", "box2i", box)
    header += _attr("displayWindow", "box2i", box)
    header += _attr("lineOrder", "lineOrder", b"\0")  # INCREASING_Y
    header += _attr("pixelAspectRatio", "float", struct.pack("<f", 1.0))
    header += _attr("screenWindowCenter", "v2f", struct.pack("<ff", 0.0, 0.0))
    header += _attr("screenWindowWidth", "float", struct.pack("<f", 1.0))
    header += b"\0"  # end of header

    # uncompressed: one scanline per chunk, each chunk = y, size, channel rows
    chunk_size = 4 * w * len(_CHANNELS)
    table_pos = len(header)
    first_chunk = table_pos + 8 * h
    offsets = [first_chunk + i * (8 + chunk_size) for i in range(h)]

    ordered = sorted(_CHANNELS)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(struct.pack(f"<{h}Q", *offsets))
        for y in range(h):
            fh.write(struct.pack("<ii", y, chunk_size))
            for name in ordered:
                fh.write(planes[name][y].astype("<f4", copy=False).tobytes())


class _Cursor:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise FormatError("truncated file")
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out

    def cstring(self, limit: int = 256) -> str:
        end = self.data.find(b"\0", self.pos, self.pos + limit)
        if end < 0:
            raise FormatError("unterminated string in header")
        out = self.data[self.pos:end].decode("ascii", "replace")
        self.pos = end + 1
        return out


def _parse_chlist(value: bytes) -> dict[str, int]:
    cur = _Cursor(value)
    channels: dict[str, int] = {}
    while True:
        if cur.pos >= len(value):
            raise FormatError("unterminated channel list")
        if value[cur.pos] == 0:
            break
        name = cur.cstring()
        pixel_type, = struct.unpack("<i", cur.take(4))
        cur.take(12)  # pLinear + reserved + x/y sampling
        channels[name] = pixel_type
    return channels


def read_rgba(path: str | Path) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Read a file produced by write_rgba; returns float32 (R, G, B, A) planes."""
    data = Path(path).read_bytes()
    cur = _Cursor(data)
    magic, version = struct.unpack("<ii", cur.take(8))
    if magic != _MAGIC:
        raise FormatError("not an EXR file (bad magic)")
    if version & (_FLAG_TILED | _FLAG_DEEP | _FLAG_MULTIPART):
        raise FormatError("tiled/deep/multipart files are not supported")
    if (version & 0xFF) not in (1, 2):
        raise FormatError(f"unsupported format version {version & 0xFF}")

    channels: dict[str, int] | None = None
    compression: int | None = None
    line_order = 0
    window = None
    while True:
        if cur.pos >= len(data):
            raise FormatError("truncated header")
        if data[cur.pos] == 0:
            cur.pos += 1
            break
        name = cur.cstring()
        type_name = cur.cstring()
        size, = struct.unpack("<i", cur.take(4))
        if size < 0:
            raise FormatError(f"attribute {name}: negative size")
        value = cur.take(size)
        if name == "channels" and type_name == "chlist":
            channels = _parse_chlist(value)
        elif name == "compression":
            compression = value[0]
        elif name == "lineOrder":
            line_order = value[0]
        elif name == "dataWindow" and type_name == "box2i":
            window = struct.unpack("<iiii", value)

    if channels is None or compression is None or window is None:
        raise FormatError("missing required header attribute")
    if compression != 0:
        raise FormatError(f"unsupported compression mode {compression}")
    if line_order != 0:
        raise FormatError(f"unsupported line order {line_order}")
    for want in _CHANNELS:
        if want not in channels:
            raise FormatError(f"missing channel {want!r}")
    for name, ptype in channels.items():
        if ptype != _PT_FLOAT:
            raise FormatError(f"channel {name!r}: pixel type {ptype} is not FLOAT")
    if set(channels) != set(_CHANNELS):
        raise FormatError(f"unexpected channel set {sorted(channels)}")

    x_min, y_min, x_max, y_max = window
    w, h = x_max - x_min + 1, y_max - y_min + 1
    if w <= 0 or h <= 0:
        raise FormatError("empty data window")

    offsets = struct.unpack(f"<{h}Q", cur.take(8 * h))
    ordered = sorted(_CHANNELS)
    planes = {name: np.empty((h, w), dtype=np.float32) for name in _CHANNELS}
    row_bytes = 4 * w
    for i, off in enumerate(offsets):
        if off + 8 > len(data):
            raise FormatError("scanline offset beyond end of file")
        y, size = struct.unpack_from("<ii", data, off)
        if y != y_min + i:
            raise FormatError(f"scanline {i}: unexpected y coordinate {y}")
        if size != row_bytes * len(_CHANNELS):
            raise FormatError(f"scanline {i}: unexpected chunk size {size}")
        pos = off + 8
        if pos + size > len(data):
            raise FormatError("truncated scanline data")
        for name in ordered:
            planes[name][i] = np.frombuffer(data, dtype="<f4", count=w, offset=pos)
            pos += row_bytes
    return planes["R"], planes["G"], planes["B"], planes["A"]
