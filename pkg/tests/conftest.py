from hypothesis import HealthCheck, settings

# one fixed seed for every property test; see also --seed on the CLI
settings.register_profile("repro", derandomize=True, max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")
