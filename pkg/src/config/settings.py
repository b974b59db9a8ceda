import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

class Settings:
    """Engine settings."""

    # Fixture corpus
    FIXTURE_DIR = os.getenv('FIXTURE_DIR', './data/fixtures')

    # Exterior power guard: |Mor|^k * k! morphism candidates
    MORPHISM_BUDGET = int(os.getenv('MORPHISM_BUDGET', 1000000))

    # Naive Leibniz determinant is only run up to this size
    LEIBNIZ_MAX_DEGREE = int(os.getenv('LEIBNIZ_MAX_DEGREE', 6))

    # Random generator
    RANDOM_SEED = int(os.getenv('RANDOM_SEED', 2024))

    # Rendering
    OUTPUT_WIDTH = int(os.getenv('OUTPUT_WIDTH', 120))

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
    LOG_FILE = os.getenv('LOG_FILE')

settings = Settings()
