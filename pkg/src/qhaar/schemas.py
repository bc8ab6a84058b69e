"""JSON Schemas for everything the package writes."""

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}

LAURENT = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"type": "integer"}, RATIONAL],
        "minItems": 2,
        "maxItems": 2,
    },
}

QSCALAR = {
    "type": "object",
    "properties": {"num": LAURENT, "den": {**LAURENT, "minItems": 1}},
    "required": ["num", "den"],
    "additionalProperties": False,
}

# with --q every scalar is replaced by its rational value
SCALAR_OUT = {"oneOf": [QSCALAR, RATIONAL]}

WORD = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"type": "integer", "minimum": 1}, {"type": "integer", "minimum": 1}],
        "minItems": 2,
        "maxItems": 2,
    },
}

ALG_ELEMENT = {
    "type": "object",
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"word": WORD, "coeff": SCALAR_OUT},
                "required": ["word", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["N", "terms"],
    "additionalProperties": False,
}

TENSOR_ELEMENT = {
    "type": "object",
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"left": WORD, "right": WORD, "coeff": SCALAR_OUT},
                "required": ["left", "right", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["N", "terms"],
    "additionalProperties": False,
}

INT_VECTOR = {"type": "array", "items": {"type": "integer"}}
BIDEGREE = {"type": "array", "prefixItems": [INT_VECTOR, INT_VECTOR], "minItems": 2, "maxItems": 2}

SCALAR_RESULT = {
    "type": "object",
    "properties": {"N": {"type": "integer"}, "value": SCALAR_OUT},
    "required": ["N", "value"],
}

GRADE_RESULT = {
    "type": "object",
    "properties": {
        "N": {"type": "integer"},
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"bidegree": BIDEGREE, "element": ALG_ELEMENT},
                "required": ["bidegree", "element"],
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["N", "components", "notes"],
}

NORMS_RESULT = {
    "type": "object",
    "properties": {
        "N": {"type": "integer"},
        "left": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"i": {"type": "integer"}, "value": SCALAR_OUT},
                "required": ["i", "value"],
            },
        },
        "right": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"j": {"type": "integer"}, "value": SCALAR_OUT},
                "required": ["j", "value"],
            },
        },
    },
    "required": ["N", "left", "right"],
}

VERIFY_RESULT = {
    "type": "object",
    "properties": {
        "N": {"type": "integer"},
        "ok": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                },
                "required": ["name", "passed"],
            },
        },
        "notes": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["N", "ok", "checks", "notes"],
}

HAAR_CACHE = {
    "type": "object",
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "degree": {"type": "integer", "minimum": 0},
        "convention": {"const": "frt-q-standard-v1"},
        "values": {"type": "object", "additionalProperties": QSCALAR},
    },
    "required": ["N", "degree", "convention", "values"],
}

VERB_SCHEMAS = {
    "nf": ALG_ELEMENT,
    "antipode": ALG_ELEMENT,
    "star": ALG_ELEMENT,
    "theta": ALG_ELEMENT,
    "cop": TENSOR_ELEMENT,
    "haar": SCALAR_RESULT,
    "counit": SCALAR_RESULT,
    "grade": GRADE_RESULT,
    "norms": NORMS_RESULT,
    "verify": VERIFY_RESULT,
}
