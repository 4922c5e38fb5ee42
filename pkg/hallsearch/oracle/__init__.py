"""
Brute-force Oracle - exhaustive k(x) over an interval
"""

from .scan import BruteScanResult, brute_scan, scan_partition, write_samples_csv

__all__ = ["BruteScanResult", "brute_scan", "scan_partition", "write_samples_csv"]
