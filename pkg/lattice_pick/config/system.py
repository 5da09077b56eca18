import os


def load_file_contents_as_string(path: str, strip: bool = True) -> str:
    """Read a utf-8 file; raises OSError or UnicodeDecodeError for callers to translate."""
    with open(os.fspath(path), 'rb') as handle:
        contents = handle.read().decode('utf-8')
    return contents.strip() if strip else contents


def write_file_contents(path: str, contents: str) -> None:
    """Write text as utf-8 with '\\n' line endings on every platform."""
    path = os.fspath(path)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'wb') as handle:
        handle.write(contents.encode('utf-8'))
