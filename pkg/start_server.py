#!/usr/bin/env python3
"""
homweyl server startup script.
Starts the FastAPI service that exposes the command table over HTTP.
"""

import os
import subprocess
import sys
from pathlib import Path


def main():
    """Start the homweyl HTTP service"""

    project_root = Path(__file__).parent
    package_dir = project_root / "homweyl"

    if not package_dir.exists():
        print("Error: homweyl package not found. Please run this script from the project root.")
        sys.exit(1)

    os.chdir(project_root)

    # Imported here so a missing package fails with the message above
    from homweyl.config import get_settings

    settings = get_settings()

    env_file = project_root / ".env"
    if not env_file.exists():
        print("Creating .env file with default configuration...")
        with open(env_file, "w") as f:
            f.write("# homweyl environment variables (all optional)\n")
            f.write("HOMWEYL_LOG_LEVEL=INFO\n")
            f.write("HOMWEYL_SEED=0\n")
            f.write("HOMWEYL_DEGREE_CAP=3\n")
            f.write("HOMWEYL_WORKERS=1\n")

    print("Starting homweyl server...")
    print("API documentation will be available at:")
    print(f"  - Swagger UI: http://{settings.host}:{settings.port}/docs")
    print(f"  - ReDoc: http://{settings.host}:{settings.port}/redoc")
    print("\nPress Ctrl+C to stop the server.\n")

    try:
        subprocess.run([
            sys.executable, "-m", "uvicorn",
            "homweyl.main:app",
            "--host", settings.host,
            "--port", str(settings.port),
        ])
    except KeyboardInterrupt:
        print("\nServer stopped.")
    except Exception as e:
        print(f"Error starting server: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
