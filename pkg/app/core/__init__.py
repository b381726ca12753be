# Core application components: configuration, errors and logging
