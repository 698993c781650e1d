"""CSV, PLY and SVG output for point clouds and copy sets."""

from __future__ import annotations

import hashlib
import io
from pathlib import Path

import numpy as np

# indexed by (vertex label - 1) mod 12
PALETTE = (
    (31, 119, 180), (255, 127, 14), (44, 160, 44), (214, 39, 40),
    (148, 103, 189), (140, 86, 75), (227, 119, 194), (127, 127, 127),
    (188, 189, 34), (23, 190, 207), (0, 0, 128), (128, 128, 0),
)


def palette_rgb(labels) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64)
    return np.array(PALETTE, dtype=np.uint8)[(labels - 1) % len(PALETTE)]


def _hex(rgb) -> str:
    return "#%02x%02x%02x" % tuple(int(c) for c in rgb)


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _open(path, force: bool, binary: bool = False):
    mode = ("w" if force else "x") + ("b" if binary else "")
    if binary:
        return open(path, mode)
    return open(path, mode, newline="\n", encoding="ascii")


def format_csv(points, labels) -> str:
    points = np.asarray(points, dtype=float)
    n = points.shape[1]
    buf = io.StringIO()
    buf.write(",".join([f"x{k}" for k in range(1, n + 1)] + ["vertex"]) + "\n")
    row = ",".join(["%.17g"] * n) + ",%d\n"
    for pt, lab in zip(points.tolist(), np.asarray(labels).tolist()):
        buf.write(row % (*pt, lab))
    return buf.getvalue()


def write_csv(path, points, labels, force: bool = False) -> Path:
    """One row per point: coordinates at 17 significant digits, then the vertex label."""
    with _open(path, force) as fh:
        fh.write(format_csv(points, labels))
    return Path(path)


def read_csv(path) -> tuple[np.ndarray, np.ndarray]:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return data[:, :-1], data[:, -1].astype(np.int64)


def write_ply(path, points, labels, force: bool = False) -> Path:
    """Binary little-endian PLY with float xyz and uchar RGB from the palette."""
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 3:
        raise ValueError("PLY output needs 3D points")
    rgb = palette_rgb(labels)
    cloud = np.empty(len(points), dtype=[("x", "<f4"), ("y", "<f4"), ("z", "<f4"),
                                         ("red", "u1"), ("green", "u1"), ("blue", "u1")])
    cloud["x"], cloud["y"], cloud["z"] = points.T
    cloud["red"], cloud["green"], cloud["blue"] = rgb.T
    header = (
        "ply\n"
        "format binary_little_endian 1.0\n"
        f"element vertex {len(cloud)}\n"
        "property float x\nproperty float y\nproperty float z\n"
        "property uchar red\nproperty uchar green\nproperty uchar blue\n"
        "end_header\n"
    )
    with _open(path, force, binary=True) as fh:
        fh.write(header.encode("ascii"))
        fh.write(cloud.tobytes())
    return Path(path)


def read_ply(path) -> tuple[np.ndarray, np.ndarray]:
    raw = Path(path).read_bytes()
    end = raw.index(b"end_header\n") + len(b"end_header\n")
    header = raw[:end].decode("ascii").splitlines()
    if "format binary_little_endian 1.0" not in header:
        raise ValueError("not a binary little-endian PLY")
    count = next(int(line.split()[-1]) for line in header if line.startswith("element vertex"))
    dt = np.dtype([("x", "<f4"), ("y", "<f4"), ("z", "<f4"),
                   ("red", "u1"), ("green", "u1"), ("blue", "u1")])
    cloud = np.frombuffer(raw[end:], dtype=dt, count=count)
    xyz = np.column_stack([cloud["x"], cloud["y"], cloud["z"]]).astype(float)
    rgb = np.column_stack([cloud["red"], cloud["green"], cloud["blue"]])
    return xyz, rgb


class _SvgFrame:
    """viewBox around a bounding box padded by 5%, with y flipped upward."""

    def __init__(self, bounds_points, pad: float = 0.05):
        pts = np.asarray(bounds_points, dtype=float)
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = hi - lo
        self.x0 = lo[0] - pad * span[0]
        self.y0 = -hi[1] - pad * span[1]
        self.w = span[0] * (1 + 2 * pad)
        self.h = span[1] * (1 + 2 * pad)

    def open_tag(self) -> str:
        return (f'<svg xmlns="http://www.w3.org/2000/svg" '
                f'viewBox="{self.x0:.6g} {self.y0:.6g} {self.w:.6g} {self.h:.6g}">\n')

    @staticmethod
    def xy(pt) -> tuple[float, float]:
        return float(pt[0]), -float(pt[1])


def write_svg_points(path, points, labels, frame_vertices, force: bool = False) -> Path:
    """One filled circle per 2D point; radius 0.3% of the viewBox size."""
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2:
        raise ValueError("SVG output needs 2D points")
    frame = _SvgFrame(frame_vertices)
    radius = 0.003 * max(frame.w, frame.h)
    colors = [_hex(c) for c in PALETTE]
    parts = [frame.open_tag(), '<rect x="%.6g" y="%.6g" width="%.6g" height="%.6g" fill="white"/>\n'
             % (frame.x0, frame.y0, frame.w, frame.h)]
    for (x, y), lab in zip(points.tolist(), np.asarray(labels).tolist()):
        parts.append('<circle cx="%.6g" cy="%.6g" r="%.4g" fill="%s"/>\n'
                     % (x, -y, radius, colors[(lab - 1) % len(colors)]))
    parts.append("</svg>\n")
    with _open(path, force) as fh:
        fh.write("".join(parts))
    return Path(path)


def _angular_order(vertices: np.ndarray) -> np.ndarray:
    c = vertices.mean(axis=0)
    return np.argsort(np.arctan2(vertices[:, 1] - c[1], vertices[:, 0] - c[0]))


def write_svg_outlines(path, copyset, force: bool = False) -> Path:
    """Polygon outline per copy of a 2D copy set, stroked in the colour of its last map."""
    if copyset.base_vertices.shape[1] != 2:
        raise ValueError("SVG outlines need a 2D copy set")
    frame = _SvgFrame(copyset.base_vertices)
    order = _angular_order(copyset.base_vertices)
    stroke = 0.002 * max(frame.w, frame.h)
    verts = copyset.vertex_array()[:, order, :]
    parts = [frame.open_tag()]
    for k in range(len(copyset)):
        last = int(copyset.ancestry[k, -1]) if copyset.level else 1
        pts = " ".join("%.6g,%.6g" % (x, -y) for x, y in verts[k].tolist())
        parts.append('<polygon points="%s" fill="none" stroke="%s" stroke-width="%.4g"/>\n'
                     % (pts, _hex(PALETTE[(last - 1) % len(PALETTE)]), stroke))
    parts.append("</svg>\n")
    with _open(path, force) as fh:
        fh.write("".join(parts))
    return Path(path)


def write_copies_csv(path, copyset, force: bool = False) -> Path:
    """Copy vertices, one row each: coordinates, copy index, ancestry, vertex label."""
    verts = copyset.vertex_array()
    n = verts.shape[2]
    v = verts.shape[1]
    with _open(path, force) as fh:
        fh.write(",".join([f"x{k}" for k in range(1, n + 1)] + ["copy", "ancestry", "vertex"]) + "\n")
        row = ",".join(["%.17g"] * n) + ",%d,%s,%d\n"
        for c in range(len(copyset)):
            anc = "-".join(str(int(a)) for a in copyset.ancestry[c])
            for k in range(v):
                fh.write(row % (*verts[c, k].tolist(), c, anc, k + 1))
    return Path(path)
