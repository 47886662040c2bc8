from frobenius_singularities.cli.job_spec import RINGS_DIR, DEFAULT_RING_FILE, RING_FILE_ALIASES, JobSpec, load_job_spec, resolve_ring_file, parse_variables
from frobenius_singularities.cli.report import Report, exit_code_for, EXIT_DECIDED, EXIT_ERROR, EXIT_UNDECIDED
from frobenius_singularities.cli.corpus import CORPUS_JOBS, CORPUS_ALIASES, CORPUS_EXPECTATIONS, corpus_mismatches, run_corpus
from frobenius_singularities.cli.cli import COMMANDS, build_parser, run, main
