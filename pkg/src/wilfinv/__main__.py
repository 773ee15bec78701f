"""python -m wilfinv で起動可能にする."""
from wilfinv.app import main

main()
