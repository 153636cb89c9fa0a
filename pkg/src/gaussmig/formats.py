"""Params and share files.

Both are UTF-8 and line oriented (``key: value``), with an equivalent JSON
form.  Readers auto-detect JSON by a leading ``{``.  Gaussian integers are
always written as ``a+bi`` text.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional

from .gint import DomainKind, GaussianInt, in_domain
from .scheme import SchemeParams, Share, validate_params

VERSION = 1
PARAMS_TAG = "gaussmig-params"
SHARE_TAG = "gaussmig-share"


class FormatError(ValueError):
    pass


def canonical_params_text(p: SchemeParams) -> str:
    return (f"moduli: {', '.join(str(m) for m in p.moduli)}\n"
            f"m_minus: {p.m_minus}\n"
            f"m_plus: {p.m_plus}\n")


def params_digest(p: SchemeParams) -> str:
    """First 16 hex chars of SHA-256 over the canonical params text."""
    return hashlib.sha256(canonical_params_text(p).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class ParamsFile:
    params: SchemeParams
    valid: Optional[bool] = None
    seed: Optional[int] = None
    generator: Optional[str] = None

    @classmethod
    def for_params(cls, params: SchemeParams, seed=None, generator=None) -> ParamsFile:
        return cls(params, validate_params(params).valid, seed, generator)

    def to_dict(self) -> dict:
        d = {
            "format": PARAMS_TAG,
            "version": VERSION,
            "moduli": [str(m) for m in self.params.moduli],
            "m_minus": self.params.m_minus,
            "m_plus": self.params.m_plus,
        }
        if self.valid is not None:
            d["valid"] = self.valid
        if self.seed is not None:
            d["seed"] = self.seed
        if self.generator is not None:
            d["generator"] = self.generator
        return d

    def dumps(self, as_json: bool = False) -> str:
        if as_json:
            return json.dumps(self.to_dict(), indent=2) + "\n"
        lines = [f"format: {PARAMS_TAG}", f"version: {VERSION}",
                 canonical_params_text(self.params).rstrip("\n")]
        if self.valid is not None:
            lines.append(f"valid: {str(self.valid).lower()}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.generator is not None:
            lines.append(f"generator: {self.generator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> ParamsFile:
        d = _load_mapping(text, PARAMS_TAG)
        try:
            moduli = d["moduli"]
            if isinstance(moduli, str):
                moduli = [tok for tok in moduli.split(",") if tok.strip()]
            params = SchemeParams(tuple(GaussianInt.parse(m) for m in moduli),
                                  int(d["m_minus"]), int(d["m_plus"]))
            valid = d.get("valid")
            if isinstance(valid, str):
                valid = {"true": True, "false": False}[valid.lower()]
            seed = d.get("seed")
            return cls(params, valid, None if seed is None else int(seed), d.get("generator"))
        except (KeyError, ValueError, TypeError) as exc:
            raise FormatError(f"malformed params file: {exc}") from exc


@dataclass(frozen=True)
class ShareFile:
    share: Share
    params_digest: str

    def to_dict(self) -> dict:
        return {
            "format": SHARE_TAG,
            "version": VERSION,
            "index": self.share.index,
            "modulus": str(self.share.modulus),
            "residue": str(self.share.residue),
            "params_digest": self.params_digest,
        }

    def dumps(self, as_json: bool = False) -> str:
        d = self.to_dict()
        if as_json:
            return json.dumps(d, indent=2) + "\n"
        return "".join(f"{k}: {v}\n" for k, v in d.items())

    @classmethod
    def loads(cls, text: str) -> ShareFile:
        d = _load_mapping(text, SHARE_TAG)
        try:
            share = Share(int(d["index"]), GaussianInt.parse(str(d["modulus"])),
                          GaussianInt.parse(str(d["residue"])))
            digest = str(d["params_digest"])
        except (KeyError, ValueError, TypeError) as exc:
            raise FormatError(f"malformed share file: {exc}") from exc
        if not share.modulus:
            raise FormatError("share modulus is zero")
        if not in_domain(share.residue, share.modulus, DomainKind.HALF_OPEN):
            raise FormatError(
                f"share residue {share.residue} is not a principal value mod {share.modulus}")
        return cls(share, digest)


def _load_mapping(text: str, tag: str) -> dict:
    if text.lstrip().startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        if not isinstance(d, dict):
            raise FormatError("expected a JSON object")
    else:
        d = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise FormatError(f"line {lineno}: expected 'key: value', got {raw!r}")
            d[key.strip()] = value.strip()
    if d.get("format", tag) != tag:
        raise FormatError(f"expected a {tag} file, found {d.get('format')!r}")
    version = d.get("version", VERSION)
    if str(version) != str(VERSION):
        raise FormatError(f"unsupported version {version!r}")
    return d
