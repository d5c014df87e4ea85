from .schema import (
    ClassDef,
    OntologySchema,
    Origin,
    PropertyClassDef,
    PropertyDef,
    SchemaIntegrityError,
    UnknownAttributeError,
    UnknownClassError,
    UnknownPropertyClassError,
    UnknownPropertyError,
    Violation,
    ViolationLevel,
    app_iri,
    crm_class_iri,
    crm_property_iri,
    load_builtin,
    sealit_iri,
)

__all__ = [
    "ClassDef",
    "OntologySchema",
    "Origin",
    "PropertyClassDef",
    "PropertyDef",
    "SchemaIntegrityError",
    "UnknownAttributeError",
    "UnknownClassError",
    "UnknownPropertyClassError",
    "UnknownPropertyError",
    "Violation",
    "ViolationLevel",
    "app_iri",
    "crm_class_iri",
    "crm_property_iri",
    "load_builtin",
    "sealit_iri",
]
