import os
from typing import Any, Dict, Optional

from lattice_pick import flags
from lattice_pick.config.system import load_file_contents_as_string
from lattice_pick.config.validate import validate_config
from lattice_pick.config.yaml_utils import load_yaml_from_text
from lattice_pick.errors import ConfigError

DEFAULTS = {
    'survey': {'trials': 30, 'size': 20, 'seed': 0, 'vertices': 6},
    'generate': {'size': 20, 'seed': 0, 'vertices': 6},
    'workers': 1,
}


def read_lattice_pick_config(config_dir: Optional[str] = None) -> Dict[str, Any]:
    """
    Parses the lattice_pick config file and returns its contents, {} when absent.
    """
    config_file = os.path.join(config_dir or flags.LATTICE_PICK_CONFIG_DIR, 'lattice_pick.yml')
    if not os.path.isfile(config_file):
        return {}

    try:
        contents = load_file_contents_as_string(config_file, strip=False)
    except OSError as e:
        raise ConfigError(f"cannot read {config_file}: {e.strerror}")
    except UnicodeDecodeError as e:
        raise ConfigError(f"{config_file} is not utf-8: {e.reason} at byte {e.start}")
    config = load_yaml_from_text(contents) or {}
    validate_config(config)
    return config


def resolve_option(value, config: Dict[str, Any], section: str, key: str):
    """CLI flag, then config file, then built-in default."""
    if value is not None:
        return value
    section_config = config.get(section) or {}
    if key in section_config:
        return section_config[key]
    return DEFAULTS[section][key]


def resolve_workers(value, config: Dict[str, Any], env_default: str):
    """CLI flag, then config file, then the LATTICE_PICK_WORKERS value, then 1."""
    if value is not None:
        return value
    if 'workers' in config:
        return config['workers']
    env_default = (env_default or '').strip()
    if not env_default:
        return DEFAULTS['workers']
    try:
        workers = int(env_default)
    except ValueError:
        workers = 0
    if workers < 1:
        raise ConfigError(f"LATTICE_PICK_WORKERS must be a positive integer, got {env_default!r}")
    return workers
