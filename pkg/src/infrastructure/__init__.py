# Infrastructure utilities for logging and monitoring
