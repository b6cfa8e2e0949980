"""Growth-history rendering.

A growth trace drawn with time on the x-axis forms a triangle: every
column is one cell taller than the one before it. Cell values are drawn
inverted (255 - value), so empty cells and not-yet-grown area are white
and high-valued cells are dark.
"""

from __future__ import annotations

from os import PathLike
from typing import BinaryIO, Sequence, Union

import numpy as np

from .automaton import CAState
from .errors import EmptyTraceError, GrowCAError, NonMonotoneTraceError

Destination = Union[str, PathLike, BinaryIO]


class GrowthImage:
    """Row-major 8-bit grayscale image, one byte per pixel."""

    __slots__ = ("width", "height", "pixels")

    def __init__(self, width: int, height: int, pixels: bytes):
        if width < 1 or height < 1:
            raise GrowCAError("image dimensions must be positive")
        if len(pixels) != width * height:
            raise GrowCAError(
                f"pixel buffer holds {len(pixels)} bytes, expected {width * height}"
            )
        self.width = width
        self.height = height
        self.pixels = bytes(pixels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrowthImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.pixels == other.pixels
        )

    def __repr__(self) -> str:
        return f"GrowthImage(width={self.width}, height={self.height})"


def render_growth(trace: Sequence[CAState]) -> GrowthImage:
    """Draw a growth trace as a triangle, one column per snapshot.

    Column t holds 255 - cell value for every cell the register had at
    snapshot t, top-aligned; rows the register had not reached yet stay
    white. Image height is the final register length.
    """
    if len(trace) == 0:
        raise EmptyTraceError("cannot render an empty trace")
    lengths = [len(state) for state in trace]
    for col, (earlier, later) in enumerate(zip(lengths, lengths[1:])):
        if later != earlier + 1:
            raise NonMonotoneTraceError(
                f"snapshot lengths must increase by one; snapshot {col} has"
                f" {earlier} cells, snapshot {col + 1} has {later}"
            )
    width = len(trace)
    height = lengths[-1]
    img = np.full((height, width), 255, dtype=np.uint8)
    for col, state in enumerate(trace):
        cells = np.frombuffer(state.cells, dtype=np.uint8)
        img[: len(cells), col] = 255 - cells
    return GrowthImage(width=width, height=height, pixels=img.tobytes())


def write_pgm(image: GrowthImage, destination: Destination) -> None:
    """Write the image as binary PGM (magic P5, maxval 255).

    `destination` is a filesystem path or a writable binary stream. The
    output is bit-exact for a given image: header
    "P5\\n<width> <height>\\n255\\n" followed by the row-major pixels.
    """
    header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
    payload = header + image.pixels
    if hasattr(destination, "write"):
        destination.write(payload)
    else:
        with open(destination, "wb") as handle:
            handle.write(payload)
