from typing import Dict

from hahnspec.core import ConfigError
from hahnspec.scanning.base import ScanConfig

# Rectangle [-1, 3] x [-2, 2] centred on the disk |1 - alpha| <= 1, spacing 0.1.
GRID_PRESETS: Dict[str, dict] = {
    "reference": dict(re_min=-1.0, re_max=3.0, im_min=-2.0, im_max=2.0, nx=41, ny=41, truncation=64),
}


def get_preset(name: str, **overrides) -> ScanConfig:
    if name not in GRID_PRESETS:
        raise ConfigError(f"unknown grid preset {name!r}, choose from {sorted(GRID_PRESETS)}", field="grid_preset")
    return ScanConfig.create(**{**GRID_PRESETS[name], **overrides})
