"""
Staged report files: write into a temporary sibling, move into place on success.

A report is never left half-written at its destination. The temporary file is
created next to the destination with `tempfile.mkstemp` and renamed over it
with `os.replace` once the writer finishes. If the writer fails, the staged
report is garbage collected, or the interpreter exits first, a
`weakref.finalize` finalizer discards the temporary file.

Classes:
    - StagedReport: Context manager yielding a text stream for one destination.

Functions:
    - check_destination: Validates an output path.
    - pending_paths: Temporary files not yet committed or discarded.
"""
import os
from pathlib import Path
from tempfile import mkstemp
from threading import Lock
from typing import TextIO
from weakref import finalize

from ._SETTINGS import REPORT_PREFIX, REPORT_SUFFIX
from ._log import debug_log

_pending = list()
_lock = Lock()


def check_destination(path: Path | str) -> Path:
    """
    Validates a report destination:
    - It is not empty.
    - It is a string or Path object.
    - Its parent directory exists.
    - It is not an existing directory.

    Args:
        path (Path | str): The destination to validate.

    Returns:
        Path: The validated Path object.

    Raises:
        ValueError: If the path is empty or names a directory.
        TypeError: If the path is not a string or Path object.
        FileNotFoundError: If the parent directory does not exist.
    """
    if path is None or path == "" or path == Path(""):
        raise ValueError("path cannot be empty")
    if not isinstance(path, str) and not isinstance(path, Path):
        raise TypeError("path must be a string or Path")
    path = Path(path)
    if not path.parent.is_dir():
        raise FileNotFoundError(f"Parent directory does not exist: {path.parent}")
    if path.is_dir():
        raise ValueError(f"Path is a directory: {path}")
    return path


def _discard(path: Path) -> None | OSError:
    """
    Removes a staged temporary file.

    Returns:
        None: If the file was removed.
        OSError: If removal failed (e.g., the file is already gone).

    Note:
        This function does not raise exceptions; it returns the exception instance if an error occurs.
    """
    with _lock:
        if path in _pending:
            _pending.remove(path)
    try:
        os.remove(path)
        return None
    except OSError as exc:
        return exc


def pending_paths() -> list[Path]:
    with _lock:
        return list(_pending)


class StagedReport:
    """
    Usage:
        with StagedReport(path) as stream:
            stream.write(...)

    Attributes:
        destination (Path): Where the report ends up.
        temp_path (Path | None): The staged file while the report is open.
    """

    def __init__(self, destination: Path | str):
        self.destination = check_destination(destination)  # raises exceptions on errors
        self.temp_path = None
        self._stream = None
        self._finalizer = None

    def __enter__(self) -> TextIO:
        fd, name = mkstemp(suffix=REPORT_SUFFIX, prefix=REPORT_PREFIX, dir=self.destination.parent, text=True)
        self.temp_path = Path(name)
        with _lock:
            _pending.append(self.temp_path)
        self._finalizer = finalize(self, _discard, self.temp_path)
        self._stream = os.fdopen(fd, "w", newline="")
        return self._stream

    def __exit__(self, exc_type, exc, tb) -> bool:
        self._stream.close()
        if exc_type is None:
            self.commit()
        else:
            error = self.discard()
            if error is not None:
                debug_log(f"could not discard {self.temp_path}: {error}")
        return False

    def commit(self) -> None:
        """
        Raises:
            OSError: If the move fails; the staged file is discarded first.
        """
        try:
            os.replace(self.temp_path, self.destination)
        except OSError:
            self.discard()
            raise
        # Detached finalizer means the file is no longer ours to delete
        self._finalizer.detach()
        with _lock:
            if self.temp_path in _pending:
                _pending.remove(self.temp_path)
        debug_log(f"report written to {self.destination}")

    def discard(self) -> None | OSError:
        # Finalizer avoids double removal
        return self._finalizer()
