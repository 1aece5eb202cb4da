import hypothesis

hypothesis.settings.register_profile("rwnet", deadline=None)
hypothesis.settings.load_profile("rwnet")
