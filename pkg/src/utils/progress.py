import sys
from typing import Iterable, Optional, TypeVar

from tqdm import tqdm

from config import config

T = TypeVar("T")


def progress(iterable: Iterable[T], desc: str, total: Optional[int] = None) -> Iterable[T]:
    """Wrap an iterable in a tqdm bar on stderr, unless progress is disabled."""
    return tqdm(
        iterable,
        desc=desc,
        total=total,
        file=sys.stderr,
        disable=not config.show_progress,
        leave=False,
    )
