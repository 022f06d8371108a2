from .instance import TargetVariant, VestInstance
from .bruteforce import mk_bruteforce, decide, exists_up_to, find_witness
from .codec import instance_to_json, instance_from_json, load_instance, dump_json
