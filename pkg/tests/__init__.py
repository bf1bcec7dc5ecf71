# Tests for ac-workbench
