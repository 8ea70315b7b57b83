"""
Configuration file for the Circulant Symmetry Toolkit
Customize these settings based on your needs
"""

import os
from pathlib import Path

# Application Configuration
APP_NAME = "Circulant Symmetry Toolkit"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Twin, co-twin and automorphism analysis of circulant and small vertex-transitive graphs"

# File Paths
BASE_DIR = Path(__file__).parent
DATA_DIR = BASE_DIR / "data"
GOLDEN_DIR = DATA_DIR / "golden"
LOGS_DIR = BASE_DIR / "logs"

# Graph Configuration
GRAPH_CONFIG = {
    "max_order": 512,  # desk-scale analyses only
}

# Automorphism Oracle Configuration
ORACLE_CONFIG = {
    "enumeration_limit": 200000,
    "exhaustive_group_limit": 50000,
    "max_oracle_order": 24,
}

# Symmetry Parameter Configuration
SYMMETRY_CONFIG = {
    "default_mode": "both",
    "available_modes": ["formula", "exhaustive", "both"],
    "max_exhaustive_dist_order": 16,
    "max_exhaustive_dist_colors": 3,
    "max_exhaustive_det_order": 20,
}

# Catalog Configuration
CATALOG_CONFIG = {
    "default_max_n": 60,
    "fingerprint_resolve_max_n": 24,
    "family_max_blocks": 10,  # larger twin-class families are counted, not built
    "jobs": ["table1", "table2", "cotwin-orders", "twin-class-families"],
    "golden_files": {
        "table1": GOLDEN_DIR / "table1.csv",
        "table2": GOLDEN_DIR / "table2.csv",
    },
}

# Export Configuration
EXPORT_CONFIG = {
    "json_schema": 1,
    "json_indent": 2,
    "csv_index": False,
}

# Logging Configuration
LOGGING_CONFIG = {
    "level": "INFO",
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "file": LOGS_DIR / "circulant_toolkit.log",
    "max_file_size_mb": 10,
    "backup_count": 5
}

# Environment-specific overrides
if os.getenv("ENVIRONMENT") == "development":
    LOGGING_CONFIG["level"] = "DEBUG"

if os.getenv("ENVIRONMENT") == "production":
    LOGGING_CONFIG["level"] = "WARNING"

if os.getenv("CIRCULANT_MAX_ORDER"):
    GRAPH_CONFIG["max_order"] = int(os.getenv("CIRCULANT_MAX_ORDER"))

if os.getenv("CIRCULANT_LOG_LEVEL"):
    LOGGING_CONFIG["level"] = os.getenv("CIRCULANT_LOG_LEVEL").upper()

# Validation functions
def validate_config():
    """Validate configuration settings"""
    errors = []

    if GRAPH_CONFIG["max_order"] <= 0:
        errors.append("Graph size cap must be positive")

    if ORACLE_CONFIG["enumeration_limit"] <= 0:
        errors.append("Enumeration limit must be positive")

    if SYMMETRY_CONFIG["default_mode"] not in SYMMETRY_CONFIG["available_modes"]:
        errors.append("Default symmetry mode must be in available modes list")

    if SYMMETRY_CONFIG["max_exhaustive_dist_colors"] < 1:
        errors.append("Exhaustive distinguishing search needs at least one color")

    if CATALOG_CONFIG["default_max_n"] < 6:
        errors.append("Catalog scans need max_n >= 6")

    return errors

def get_config_summary():
    """Get a summary of current configuration"""
    return {
        "app_name": APP_NAME,
        "version": APP_VERSION,
        "max_order": GRAPH_CONFIG["max_order"],
        "enumeration_limit": ORACLE_CONFIG["enumeration_limit"],
        "symmetry_mode": SYMMETRY_CONFIG["default_mode"],
        "catalog_max_n": CATALOG_CONFIG["default_max_n"],
    }

# Initialize configuration
if __name__ == "__main__":
    errors = validate_config()
    if errors:
        print("Configuration errors found:")
        for error in errors:
            print(f"  - {error}")
    else:
        print("Configuration validation passed!")
        print("\nConfiguration summary:")
        summary = get_config_summary()
        for key, value in summary.items():
            print(f"  {key}: {value}")
