import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

    # Worker transport only; no computed value depends on these.
    CELERY_BROKER_URL = os.getenv("CELERY_BROKER_URL", "redis://localhost:6379/0")
    CELERY_RESULT_BACKEND = os.getenv("CELERY_RESULT_BACKEND", "redis://localhost:6379/0")
    CELERY_ALWAYS_EAGER = os.getenv("CELERY_ALWAYS_EAGER", "1") == "1"

    ENUMERATION_CUTOFF = 8

    GROUP_ATOM_LIMIT = 7
    BUNDLE_ATOM_LIMIT = 6

    DIAGONAL_K = 64
    DIAGONAL_WINDOW = 64

    ESCAPE_TOY_COUNT = 10_000
    SEQNAT_DECODE_RANGE = 10_000
    SEQNAT_MAX_ENTRY = 10
    SEQNAT_MAX_LENGTH = 3
