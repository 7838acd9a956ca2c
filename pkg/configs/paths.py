from pathlib import Path

ROOT: Path = Path(__file__).parent.parent
DATA: Path = ROOT / "data"
RESULTS: Path = DATA / "results"
