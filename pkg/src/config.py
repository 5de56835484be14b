"""Configuration management for the toolkit"""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Toolkit configuration"""

    # Logging
    LOG_LEVEL = os.getenv("CUBIC_LOG_LEVEL", "WARNING").upper()

    # Randomized sweeps
    RANDOM_SEED = int(os.getenv("CUBIC_RANDOM_SEED", "20"))
    RANDOM_PAIRS = int(os.getenv("CUBIC_RANDOM_PAIRS", "10000"))
    RANDOM_POST_FORMULAS = int(os.getenv("CUBIC_RANDOM_POST_FORMULAS", "1000"))
    COMPACTNESS_TRIALS = int(os.getenv("CUBIC_COMPACTNESS_TRIALS", "1000"))

    # Exhaustive bounds
    MAX_FACE_DIM = int(os.getenv("CUBIC_MAX_FACE_DIM", "4"))
    ISO_MAX_CARRIER = int(os.getenv("CUBIC_ISO_MAX_CARRIER", "81"))
    LIND_MAX_TABLE_DIM = int(os.getenv("CUBIC_LIND_MAX_TABLE_DIM", "5"))
    FREE_MAX_ARITY = int(os.getenv("CUBIC_FREE_MAX_ARITY", "2"))
    CLONE_MAX_ARITY = int(os.getenv("CUBIC_CLONE_MAX_ARITY", "2"))
    ENUM_MAX_SIZE = int(os.getenv("CUBIC_ENUM_MAX_SIZE", "5"))

    @classmethod
    def iso_max_dimension(cls) -> int:
        """Largest n with 3^n within the isomorphism search bound"""
        n = 0
        while 3 ** (n + 1) <= cls.ISO_MAX_CARRIER:
            n += 1
        return n

    @classmethod
    def validate(cls) -> bool:
        """Validate configuration consistency"""
        counts = [
            cls.RANDOM_PAIRS,
            cls.RANDOM_POST_FORMULAS,
            cls.COMPACTNESS_TRIALS,
            cls.MAX_FACE_DIM,
            cls.LIND_MAX_TABLE_DIM,
            cls.FREE_MAX_ARITY,
            cls.ENUM_MAX_SIZE,
        ]
        if any(count <= 0 for count in counts):
            return False
        if cls.ISO_MAX_CARRIER < 3:
            return False
        if cls.CLONE_MAX_ARITY != 2:
            return False
        return True
