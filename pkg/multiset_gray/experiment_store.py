#!/usr/bin/env python3
"""
Experiment store for motion comparisons
Keeps computed (n, k) comparison rows in SQLite so long sweeps can resume
"""

import logging
import os
import sqlite3
import time
from typing import Iterable, List, Optional, Set

from . import config
from .metrics import ComparisonRow

logger = logging.getLogger(__name__)


def _flag(value: Optional[bool]) -> Optional[int]:
    return None if value is None else int(value)


def _unflag(value: Optional[int]) -> Optional[bool]:
    return None if value is None else bool(value)


class ExperimentStore:
    """
    SQLite-backed cache of ComparisonRow results.

    One row per (n, k); saving a row again replaces it.
    """

    def __init__(self, db_path: str = config.DB_PATH):
        """
        Open (and create if needed) the store.

        Args:
            db_path: Path to SQLite database file, or ":memory:"

        Example:
            >>> store = ExperimentStore(":memory:")
            >>> store.row_count()
            0
        """
        self.db_path = db_path

        if db_path != ":memory:":
            directory = os.path.dirname(db_path)
            if directory:
                os.makedirs(directory, exist_ok=True)

        self.conn = sqlite3.connect(db_path, check_same_thread=False)
        self.conn.row_factory = sqlite3.Row
        self._init_db()

        logger.info(f"ExperimentStore initialized with database: {db_path}")

    def _init_db(self):
        """Create database schema if it doesn't exist."""
        cursor = self.conn.cursor()

        cursor.execute("""
            CREATE TABLE IF NOT EXISTS motion_rows (
                n INTEGER NOT NULL,
                k INTEGER NOT NULL,
                w_b INTEGER NOT NULL,
                w_e INTEGER NOT NULL,
                w_e_complement INTEGER NOT NULL,
                exp_a INTEGER NOT NULL,
                exp_b INTEGER,
                exp_c INTEGER,
                computed_at INTEGER NOT NULL,
                PRIMARY KEY (n, k)
            )
        """)

        self.conn.commit()
        logger.debug("Database schema initialized")

    def save_rows(self, rows: Iterable[ComparisonRow]) -> int:
        """
        Insert or replace comparison rows.

        Returns:
            int: Number of rows written (0 on error)
        """
        try:
            now = int(time.time())
            records = [
                (row.n, row.k, row.W_B, row.W_E, row.W_E_complement,
                 int(row.exp_a), _flag(row.exp_b), _flag(row.exp_c), now)
                for row in rows
            ]
            cursor = self.conn.cursor()
            cursor.executemany("""
                INSERT OR REPLACE INTO motion_rows
                (n, k, w_b, w_e, w_e_complement, exp_a, exp_b, exp_c, computed_at)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
            """, records)

            self.conn.commit()
            logger.info(f"Saved {len(records)} comparison rows")
            return len(records)

        except Exception as e:
            logger.error(f"Error saving comparison rows: {e}")
            return 0

    def load_rows(self, n_max: Optional[int] = None) -> List[ComparisonRow]:
        """
        Stored rows ordered by (n, k), optionally only n <= n_max.

        Example:
            >>> [(r.n, r.k) for r in store.load_rows(3)]
            [(2, 1), (3, 1), (3, 2)]
        """
        try:
            cursor = self.conn.cursor()
            if n_max is None:
                cursor.execute("SELECT * FROM motion_rows ORDER BY n, k")
            else:
                cursor.execute("SELECT * FROM motion_rows WHERE n <= ? ORDER BY n, k", (n_max,))

            return [
                ComparisonRow(
                    n=row["n"],
                    k=row["k"],
                    W_B=row["w_b"],
                    W_E=row["w_e"],
                    W_E_complement=row["w_e_complement"],
                    exp_a=bool(row["exp_a"]),
                    exp_b=_unflag(row["exp_b"]),
                    exp_c=_unflag(row["exp_c"]),
                )
                for row in cursor.fetchall()
            ]

        except Exception as e:
            logger.error(f"Error loading comparison rows: {e}")
            return []

    def completed_sizes(self) -> Set[int]:
        """Every n whose rows for all 0 < k < n are stored."""
        try:
            cursor = self.conn.cursor()
            cursor.execute("SELECT n, COUNT(*) AS cells FROM motion_rows GROUP BY n")
            return {row["n"] for row in cursor.fetchall() if row["cells"] == row["n"] - 1}

        except Exception as e:
            logger.error(f"Error reading completed sizes: {e}")
            return set()

    def row_count(self) -> int:
        try:
            cursor = self.conn.cursor()
            cursor.execute("SELECT COUNT(*) FROM motion_rows")
            return cursor.fetchone()[0]

        except Exception as e:
            logger.error(f"Error counting comparison rows: {e}")
            return 0

    def clear(self) -> int:
        """
        Delete every stored row.

        Returns:
            int: Number of rows removed
        """
        try:
            cursor = self.conn.cursor()
            cursor.execute("DELETE FROM motion_rows")
            self.conn.commit()
            logger.info(f"Cleared {cursor.rowcount} comparison rows")
            return cursor.rowcount

        except Exception as e:
            logger.error(f"Error clearing comparison rows: {e}")
            return 0

    def close(self):
        """Close database connection."""
        if self.conn:
            self.conn.close()
            logger.info("Database connection closed")

    def __enter__(self) -> "ExperimentStore":
        return self

    def __exit__(self, *exc):
        self.close()
