class Constants:

    MAX_MATRIX_ENTRIES = 10 ** 8  # Largest dense matrix any routine may materialize
    MAX_COCHAIN_DIM = 200000      # Largest cochain space a bar oracle may enumerate
    BATCH_ENTRIES = 2 * 10 ** 7   # Entries per batch when applying a differential to many cochains

    MAX_PRIME = 2 ** 16

    EXHAUSTIVE_ASSOCIATIVITY_DIM = 40
    EXHAUSTIVE_GROUP_ORDER = 64
    EXHAUSTIVE_ISO_DIM = 64
    DENSE_STRUCTURE_MAX_DIM = 128
    SAMPLED_TRIPLES = 2000
    SAMPLED_MODULE_PAIRS = 400
    RANDOM_ISO_PAIRS = 10 ** 4
    MAX_HOM_UNKNOWNS = 1024       # Largest Hom_D or Hom_Gamma system solved directly
    RANDOM_SEED = 20240611

    DEFAULT_MAX_DEGREE = 6
    DEFAULT_ORACLE_MAX_DEGREE = 3

    NUM_WORKERS = 4

    API_HOST = "localhost"
    API_PORT = 4800
    JOB_ID_LENGTH = 20
