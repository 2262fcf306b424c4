from tornheim.cli import main
import sys

sys.exit(main())
