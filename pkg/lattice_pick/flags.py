import os

DEFAULT_CONFIG_DIR = os.path.join(os.path.expanduser("~"), ".lattice_pick")
LATTICE_PICK_CONFIG_DIR = os.path.expanduser(os.getenv("LATTICE_PICK_CONFIG_DIR", DEFAULT_CONFIG_DIR))
LOG_LEVEL = os.getenv("LATTICE_PICK_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
WORKERS = os.getenv("LATTICE_PICK_WORKERS", "")
