# Unit tests for the l1lab core
