from .cli import (main, run)
from .initialization import initialize
from .input_validation import (process_input, read_domino_weights, read_network, validate_input)
from .workflow_conjectures import workflow_conjecture
from .workflow_families import (workflow_family, workflow_oracle)
from .workflow_polynomials import (workflow_plee, workflow_pleh, workflow_qpoly)
from .workflow_sequences import (workflow_minimal, workflow_paths, workflow_verify)


__all__ = [
    'initialize', 'main', 'process_input', 'read_network', 'run', 'validate_input',
    'workflow_conjecture', 'workflow_family', 'workflow_minimal', 'workflow_oracle',
    'workflow_paths', 'workflow_plee', 'workflow_pleh', 'workflow_qpoly',
    'workflow_verify']
