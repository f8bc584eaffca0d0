# Copyright 2026 The anomalab Authors.

from anomalab.cli import main

if __name__ == "__main__":
    main()
