import sys

from PlanarEuler.cli import main

sys.exit(main())
