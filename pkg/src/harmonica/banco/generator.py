"""Product generation: render activated core assets into a file tree.

Generation is a pure function of (knowledge base, model, configuration,
variables): rendered bytes, the manifest, and the optional zip archive are
all reproducible hash-for-hash. The manifest is written into the output
directory as manifest.json and lists every generated file with its SHA-256.
"""

from __future__ import annotations

import hashlib
import io
import json
import zipfile
from dataclasses import dataclass
from pathlib import Path

from ..errors import InvalidConfigurationError, PathCollisionError
from ..jsonio import canonical_json_bytes
from .configuration import Configuration, STATUS_VALID, validate_configuration
from .features import FeatureModel
from .templates import parse_template

MANIFEST_FILE = "manifest.json"
# stored timestamps would break byte-level reproducibility
_EPOCH = (1980, 1, 1, 0, 0, 0)


@dataclass(frozen=True)
class ManifestEntry:
    path: str
    byte_length: int
    sha256: str

    def to_payload(self) -> dict:
        return {"path": self.path, "bytes": self.byte_length, "sha256": self.sha256}


@dataclass(frozen=True)
class ProductManifest:
    entries: tuple[ManifestEntry, ...]
    config_digest: str
    kb_version: str

    def to_payload(self) -> dict:
        return {
            "entries": [e.to_payload() for e in self.entries],
            "config_digest": self.config_digest,
            "kb_version": self.kb_version,
        }


def config_digest(config: Configuration) -> str:
    canonical = json.dumps(
        {"deselected": sorted(config.deselected), "selected": sorted(config.selected)},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def render_product(config: Configuration, model: FeatureModel, kb,
                   variables: dict[str, str]) -> tuple[ProductManifest, dict[str, bytes]]:
    """Render every activated asset; returns the manifest and the file map."""
    report = validate_configuration(config, model)
    if report.status != STATUS_VALID:
        raise InvalidConfigurationError(
            f"configuration is {report.status}; generation needs a complete valid configuration",
            status=report.status,
            violations=[v.to_payload() for v in report.violations],
            open=list(report.open),
        )

    files: dict[str, bytes] = {}
    owners: dict[str, str] = {}
    for asset in kb.assets:
        if not set(asset.activating_features) <= config.selected:
            continue
        path = parse_template(asset.output_path_template).render(variables, config.selected)
        _check_rendered_path(path, asset.id)
        if path in owners:
            raise PathCollisionError(path, [owners[path], asset.id])
        owners[path] = asset.id
        body = parse_template(asset.body).render(variables, config.selected)
        files[path] = body.encode("utf-8")

    entries = tuple(
        ManifestEntry(
            path=path,
            byte_length=len(files[path]),
            sha256=hashlib.sha256(files[path]).hexdigest(),
        )
        for path in sorted(files)
    )
    manifest = ProductManifest(
        entries=entries,
        config_digest=config_digest(config),
        kb_version=kb.version,
    )
    return manifest, files


def write_product_tree(manifest: ProductManifest, files: dict[str, bytes], out_dir: str | Path) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for path, data in files.items():
        target = out / path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
    (out / MANIFEST_FILE).write_bytes(canonical_json_bytes(manifest.to_payload()))


def generate_product(config: Configuration, model: FeatureModel, kb,
                     out_dir: str | Path, variables: dict[str, str]) -> ProductManifest:
    """Render and write the product tree plus manifest.json under out_dir."""
    manifest, files = render_product(config, model, kb, variables)
    write_product_tree(manifest, files, out_dir)
    return manifest


def product_archive(manifest: ProductManifest, files: dict[str, bytes]) -> bytes:
    """Deterministic zip of the generated files plus the manifest."""
    buffer = io.BytesIO()
    with zipfile.ZipFile(buffer, "w", compression=zipfile.ZIP_DEFLATED) as archive:
        for path in sorted(files):
            info = zipfile.ZipInfo(path, date_time=_EPOCH)
            info.external_attr = 0o644 << 16
            archive.writestr(info, files[path])
        info = zipfile.ZipInfo(MANIFEST_FILE, date_time=_EPOCH)
        info.external_attr = 0o644 << 16
        archive.writestr(info, canonical_json_bytes(manifest.to_payload()))
    return buffer.getvalue()


def _check_rendered_path(path: str, asset_id: str) -> None:
    segments = path.replace("\\", "/").split("/")
    if path.startswith("/") or any(seg in ("", ".", "..") for seg in segments):
        raise InvalidConfigurationError(
            f"asset {asset_id!r} rendered an unsafe output path: {path!r}",
            asset=asset_id,
            path=path,
        )
