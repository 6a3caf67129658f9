import sys

from metriclab.main import main

sys.exit(main())
