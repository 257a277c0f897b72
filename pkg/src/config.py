import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


class CalcConfig:
    def __init__(self):
        # Size bounds
        self.max_matrix_dim = int(os.getenv("QDC_MAX_DIM", "10000"))  # bound on m^n for antisymmetrizers
        self.max_group_order = int(os.getenv("QDC_MAX_GROUP_ORDER", "200"))
        self.max_closure = int(os.getenv("QDC_MAX_CLOSURE", "10000"))  # generator closure bound

        # Exterior algebra defaults
        self.n_max = int(os.getenv("QDC_NMAX", "3"))
        self.h_max = int(os.getenv("QDC_HMAX", "1"))

        # Logging / progress
        self.log_level = os.getenv("QDC_LOG_LEVEL", "INFO").upper()
        self.log_dir = os.getenv("QDC_LOG_DIR", "./logs")
        self.log_to_file = _env_bool("QDC_LOG_TO_FILE", False)
        self.show_progress = _env_bool("QDC_PROGRESS", True)

    def validate_bounds(self) -> None:
        """Validate size bounds."""
        for name in ("max_matrix_dim", "max_group_order", "max_closure"):
            value = getattr(self, name)
            if value <= 0:
                raise ValueError(f"Invalid {name}: {value}. Must be a positive integer")

    def validate_degrees(self) -> None:
        """Validate exterior-algebra degree defaults."""
        if self.n_max < 1:
            raise ValueError(f"Invalid QDC_NMAX: {self.n_max}. Must be at least 1")
        if self.h_max < 0 or self.h_max >= self.n_max:
            raise ValueError(
                f"Invalid QDC_HMAX: {self.h_max}. "
                f"Must satisfy 0 <= QDC_HMAX < QDC_NMAX ({self.n_max})"
            )


config = CalcConfig()
