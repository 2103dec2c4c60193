"""Loading of the YAML data tables shipped under config/."""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parent.parent.parent / "config"


class TableStore:
    """Reads the static tables (root list, report schema) once per process."""

    def __init__(
        self,
        roots_file: Optional[str] = None,
        schema_file: Optional[str] = None,
    ):
        """Initialize the store.

        Args:
            roots_file: Path to the H4 root table YAML file
            schema_file: Path to the report schema YAML file
        """
        self.roots_file = Path(roots_file) if roots_file else CONFIG_DIR / "h4_roots.yaml"
        self.schema_file = Path(schema_file) if schema_file else CONFIG_DIR / "report_schema.yaml"

        # Cache for parsed tables
        self._cache: Dict[Path, Dict[str, Any]] = {}

    def _load(self, path: Path) -> Dict[str, Any]:
        if path in self._cache:
            return self._cache[path]
        if not path.exists():
            raise FileNotFoundError(f"Data table not found: {path}")

        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}

        self._cache[path] = data
        logger.debug(f"Loaded data table {path}")
        return data

    # -------------------------------------------------------------------------
    # Root table
    # -------------------------------------------------------------------------

    def load_root_table(self) -> Dict[str, Any]:
        """Load the H4 root table.

        Returns:
            Dictionary with 'variables' (names) and 'roots' (linear form texts)
        """
        data = self._load(self.roots_file)
        if not isinstance(data.get('variables'), list) or not isinstance(data.get('roots'), list):
            raise ValueError(f"Root table {self.roots_file} needs 'variables' and 'roots' lists")
        return data

    def root_texts(self) -> List[str]:
        return [str(r) for r in self.load_root_table()['roots']]

    # -------------------------------------------------------------------------
    # Report schema
    # -------------------------------------------------------------------------

    def load_report_schema(self) -> Dict[str, Any]:
        """Load the report JSON Schema."""
        data = self._load(self.schema_file)
        if data.get('type') != 'object' or not isinstance(data.get('properties'), dict):
            raise ValueError(f"Report schema {self.schema_file} must describe an object with 'properties'")
        return data


_default_store: Optional[TableStore] = None


def default_store() -> TableStore:
    """Process-wide store reading from the shipped config directory."""
    global _default_store
    if _default_store is None:
        _default_store = TableStore()
    return _default_store
