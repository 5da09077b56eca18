import yaml

from lattice_pick.errors import ConfigError

try:
    from yaml import CSafeLoader as SafeLoader
except ImportError:
    from yaml import SafeLoader  # type: ignore  # noqa: F401


def load_yaml_from_text(contents):
    try:
        return yaml.load(contents, Loader=SafeLoader)
    except yaml.YAMLError as e:
        raise ConfigError(str(e))
