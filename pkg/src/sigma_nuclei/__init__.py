"""σ-A-nuclei of finite quasigroups."""
