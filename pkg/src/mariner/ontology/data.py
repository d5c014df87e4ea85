"""Embedded vocabulary tables.

Class rows are (label, direct superclass labels).  Property rows carry
label, inverse label, domain, range and direct superproperties; base
vocabulary rows additionally carry the P-code pair that forms their IRI.
Superproperty references use the P-code for base-vocabulary parents and
the plain label for domain parents.  IRIs are always namespace + label
with spaces turned into underscores.
"""

from __future__ import annotations

SEALIT_NS = "http://www.sealitproject.eu/ontology/"
CRM_NS = "http://www.cidoc-crm.org/cidoc-crm/"
APP_NS = "https://rs.sealitproject.eu/model/"

ONTOLOGY_VERSION = "1.1"

# ----------------------------------------------------------------------
# classes

CRM_CLASSES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("E1 CRM Entity", ()),
    ("E2 Temporal Entity", ("E1 CRM Entity",)),
    ("E4 Period", ("E2 Temporal Entity",)),
    ("E5 Event", ("E4 Period",)),
    ("E7 Activity", ("E5 Event",)),
    ("E11 Modification", ("E7 Activity",)),
    ("E12 Production", ("E11 Modification",)),
    ("E13 Attribute Assignment", ("E7 Activity",)),
    ("E18 Physical Thing", ("E72 Legal Object",)),
    ("E21 Person", ("E39 Actor",)),
    ("E22 Human-Made Object", ("E24 Physical Human-Made Thing",)),
    ("E24 Physical Human-Made Thing", ("E71 Human-Made Thing", "E18 Physical Thing")),
    ("E28 Conceptual Object", ("E71 Human-Made Thing",)),
    ("E29 Design or Procedure", ("E73 Information Object",)),
    ("E39 Actor", ("E77 Persistent Item",)),
    ("E41 Appellation", ("E90 Symbolic Object",)),
    ("E42 Identifier", ("E41 Appellation",)),
    ("E52 Time-Span", ("E1 CRM Entity",)),
    ("E53 Place", ("E1 CRM Entity",)),
    ("E54 Dimension", ("E1 CRM Entity",)),
    ("E55 Type", ("E28 Conceptual Object",)),
    ("E60 Number", ("E1 CRM Entity",)),
    ("E62 String", ("E1 CRM Entity",)),
    ("E63 Beginning of Existence", ("E5 Event",)),
    ("E70 Thing", ("E77 Persistent Item",)),
    ("E71 Human-Made Thing", ("E70 Thing",)),
    ("E72 Legal Object", ("E70 Thing",)),
    ("E73 Information Object", ("E90 Symbolic Object",)),
    ("E74 Group", ("E39 Actor",)),
    ("E77 Persistent Item", ("E1 CRM Entity",)),
    ("E90 Symbolic Object", ("E72 Legal Object",)),
    ("E97 Monetary Amount", ("E54 Dimension",)),
    ("PC0 Typed CRM Property", ()),
)

SEALIT_CLASSES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("Voyage", ("E7 Activity",)),
    ("Arrival", ("E7 Activity",)),
    ("Leaving", ("E7 Activity",)),
    ("Passing", ("E7 Activity",)),
    ("Loading", ("E7 Activity",)),
    ("Unloading", ("E7 Activity",)),
    ("De-flagging", ("E7 Activity",)),
    ("Discharge", ("E7 Activity",)),
    ("Civil Registration", ("E7 Activity",)),
    ("Ship Registration", ("E7 Activity",)),
    ("Ship Repair", ("E11 Modification",)),
    ("Ship Construction", ("E12 Production",)),
    ("Money for Service", ("E7 Activity",)),
    ("Money for Things", ("Money for Service",)),
    ("Money for Labour", ("Money for Service",)),
    ("Crew Payment", ("Money for Labour",)),
    ("Teaching Unit", ("E7 Activity",)),
    ("Course", ("Teaching Unit",)),
    ("Section", ("Teaching Unit",)),
    ("Service", ("E7 Activity",)),
    ("Employment", ("Service",)),
    ("Promotion", ("E13 Attribute Assignment",)),
    ("Punishment", ("E7 Activity",)),
    ("Recruitment", ("E7 Activity",)),
    ("Country", ("E53 Place",)),
    ("Horsepower", ("E54 Dimension",)),
    ("Duration", ("E54 Dimension",)),
    ("Tonnage", ("E54 Dimension",)),
    ("Port of Registry", ("E74 Group",)),
    ("Ship", ("E22 Human-Made Object",)),
    ("Ammunition", ("E22 Human-Made Object",)),
    ("Language Capacity", ("E55 Type",)),
    ("Literacy Status", ("E55 Type",)),
    ("Navigation Type", ("E55 Type",)),
    ("Profession", ("E55 Type",)),
    ("Religion Status", ("E55 Type",)),
    ("Sex Type", ("E55 Type",)),
    ("Social Status", ("E55 Type",)),
    ("Subject", ("E55 Type",)),
    ("Ship Name", ("E41 Appellation",)),
    ("Ship ID", ("E42 Identifier",)),
    ("Labour Contract", ("E29 Design or Procedure",)),
    ("Legal Object Relationship", ("E1 CRM Entity",)),
    ("Ship Ownership Phase", ("Legal Object Relationship",)),
    ("Shareholding", ("Ship Ownership Phase",)),
    ("Legal Document with Temporal Validity", ("Legal Object Relationship",)),
)

# ----------------------------------------------------------------------
# base-vocabulary properties: (code, label, inverse code, inverse label,
# domain, range, direct superproperty codes)

CRM_PROPERTIES: tuple[
    tuple[str, str, str | None, str | None, str, str, tuple[str, ...]], ...
] = (
    ("P1", "is identified by", "P1i", "identifies", "E1 CRM Entity", "E41 Appellation", ()),
    ("P2", "has type", "P2i", "is type of", "E1 CRM Entity", "E55 Type", ()),
    ("P4", "has time-span", "P4i", "is time-span of", "E2 Temporal Entity", "E52 Time-Span", ()),
    ("P7", "took place at", "P7i", "witnessed", "E4 Period", "E53 Place", ()),
    ("P9", "consists of", "P9i", "forms part of", "E4 Period", "E4 Period", ()),
    ("P12", "occurred in the presence of", "P12i", "was present at", "E63 Beginning of Existence", "E77 Persistent Item", ()),
    ("P92", "brought into existence", "P92i", "was brought into existence by", "E63 Beginning of Existence", "E77 Persistent Item", ("P12",)),
    ("P108", "has produced", "P108i", "was produced by", "E12 Production", "E24 Physical Human-Made Thing", ("P92",)),
    ("P11", "had participant", "P11i", "participated in", "E5 Event", "E39 Actor", ("P12",)),
    ("P14", "carried out by", "P14i", "performed", "E7 Activity", "E39 Actor", ("P11",)),
    ("P31", "has modified", "P31i", "was modified by", "E11 Modification", "E18 Physical Thing", ("P12",)),
    ("P15", "was influenced by", "P15i", "influenced", "E7 Activity", "E1 CRM Entity", ()),
    ("P17", "was motivated by", "P17i", "motivated", "E7 Activity", "E1 CRM Entity", ("P15",)),
    ("P43", "has dimension", "P43i", "is dimension of", "E70 Thing", "E54 Dimension", ()),
    ("P46", "is composed of", "P46i", "forms part of", "E18 Physical Thing", "E18 Physical Thing", ()),
    ("P74", "has current or former residence", "P74i", "is current or former residence of", "E21 Person", "E53 Place", ()),
    ("P90", "has value", None, None, "E54 Dimension", "E60 Number", ()),
    ("P107i", "is current or former member of", "P107", "has current or former member", "E39 Actor", "E74 Group", ()),
    ("P140", "assigned attribute to", "P140i", "was attributed by", "E13 Attribute Assignment", "E1 CRM Entity", ()),
    ("P141", "assigned", "P141i", "was assigned by", "E13 Attribute Assignment", "E1 CRM Entity", ()),
    ("P173", "starts before or with the end of", "P173i", "ends after or with the start of", "E2 Temporal Entity", "E2 Temporal Entity", ()),
    ("P174", "starts before the end of", "P174i", "ends after the start of", "E2 Temporal Entity", "E2 Temporal Entity", ("P173",)),
    ("P175", "starts before or with the start of", "P175i", "starts after or with the start of", "E2 Temporal Entity", "E2 Temporal Entity", ("P174",)),
    ("P184", "ends before or with the end of", "P184i", "ends with or after the end of", "E2 Temporal Entity", "E2 Temporal Entity", ("P174",)),
    ("P191", "had duration", "P191i", "was duration of", "E52 Time-Span", "E54 Dimension", ()),
    ("P01", "has domain", "P01i", "is domain of", "PC0 Typed CRM Property", "E1 CRM Entity", ()),
    ("P02", "has range", "P02i", "is range of", "PC0 Typed CRM Property", "E1 CRM Entity", ()),
)

# ----------------------------------------------------------------------
# domain properties: (label, inverse label, domain, range, direct supers)
# where a super is a P-code or a domain-property label

SEALIT_PROPERTIES: tuple[
    tuple[str, str | None, str, str, tuple[str, ...]], ...
] = (
    ("has ship ID", "ship ID identifies", "Ship", "Ship ID", ("P1",)),
    ("has navigation type", "is navigation type of", "Ship", "Navigation Type", ("P2",)),
    ("has language capacity", "is language capacity of", "E21 Person", "Language Capacity", ("P2",)),
    ("has literacy status", "is literacy status of", "E21 Person", "Literacy Status", ("P2",)),
    ("has social status", "is social status of", "E21 Person", "Social Status", ("P2",)),
    ("has sex type", "is sex type of", "E21 Person", "Sex Type", ("P2",)),
    ("has profession", "profession of", "E21 Person", "Profession", ("P2",)),
    ("has religion status", "is religion status of", "E21 Person", "Religion Status", ("P2",)),
    ("has subject", "is subject of", "Teaching Unit", "Subject", ("P2",)),
    ("consists of leaving", "leaving is part of", "Voyage", "Leaving", ("P9",)),
    ("consists of arrival", "arrival is part of", "Voyage", "Arrival", ("P9",)),
    ("consists of passing", "passing is part of", "Voyage", "Passing", ("P9",)),
    ("consists of loading", "loading is part of", "Voyage", "Loading", ("P9",)),
    ("consists of unloading", "unloading is part of", "Voyage", "Unloading", ("P9",)),
    ("constructed", "was constructed by", "Ship Construction", "Ship", ("P108",)),
    ("navigated by captain", "navigated", "Voyage", "E39 Actor", ("P14",)),
    ("registered by", "is responsible for registration", "Ship Registration", "Port of Registry", ("P14",)),
    ("money provided by", "provided money", "Money for Service", "E39 Actor", ("P14",)),
    ("was mediated by", "was mediator of", "Money for Service", "E39 Actor", ("P14",)),
    ("money provided to", "received money", "Money for Service", "E39 Actor", ("P14",)),
    ("service provided by", "provided service", "Service", "E39 Actor", ("P14",)),
    ("employment provided by", "provided employment", "Employment", "E39 Actor", ("service provided by",)),
    ("had student", "student in", "Teaching Unit", "E39 Actor", ("P11",)),
    ("repaired", "was repaired by", "Ship Repair", "Ship", ("P31",)),
    ("voyage of", "voyages", "Voyage", "Ship", ("P12",)),
    ("for voyage", "motivated payment", "Crew Payment", "Voyage", ("P17",)),
    ("has tonnage", "is tonnage of", "Ship", "Tonnage", ("P43",)),
    ("has horsepower", "is horsepower of", "Ship", "Horsepower", ("P43",)),
    ("has ammunition", "is ammunition of", "Ship", "Ammunition", ("P46",)),
    ("has duration value", None, "Duration", "E60 Number", ("P90",)),
    ("works at", "is working place of", "E21 Person", "E74 Group", ("P107i",)),
    ("concerned", "was promoted by", "Promotion", "E21 Person", ("P140",)),
    ("promoted into status type", "status type was promoted into", "Promotion", "Social Status", ("P141",)),
    ("promoted into employment position type", "employment position type was promoted into", "Promotion", "Profession", ("P141",)),
    ("started", "started by", "Recruitment", "Employment", ("P175",)),
    ("ended", "ended by", "Discharge", "Employment", ("P184",)),
    ("had duration", "duration of", "E52 Time-Span", "Duration", ("P191",)),
    ("had flag of", "was flag of", "Ship", "Country", ()),
    ("has crew number capacity", None, "Ship", "E60 Number", ()),
    ("under name", "named with", "Ship Construction", "Ship Name", ()),
    ("with ship flag of", "is flag of", "Ship Registration", "Country", ()),
    ("with ship ID", "ship ID of", "Ship Registration", "Ship ID", ()),
    ("registers", "is registered by", "Ship Registration", "Ship", ()),
    ("has owner", "is owner of phase", "Ship Ownership Phase", "E39 Actor", ()),
    ("has shareholder", "participates with share", "Shareholding", "E39 Actor", ("has owner",)),
    ("is ownership phase of", "has ownership phase", "Ship Ownership Phase", "Ship", ()),
    ("is shareholding phase of", "has shareholding", "Shareholding", "Ship", ("is ownership phase of",)),
    ("ownership under name", "name with ownership", "Ship Ownership Phase", "Ship Name", ()),
    ("is initialized by", "initializes", "Legal Object Relationship", "E5 Event", ()),
    ("ownership is initialized by", "initializes ownership", "Ship Ownership Phase", "Ship Registration", ("is initialized by",)),
    ("is terminated by", "terminates", "Legal Object Relationship", "E5 Event", ()),
    ("ownership is terminated by", "terminates ownership", "Ship Ownership Phase", "De-flagging", ("is terminated by",)),
    ("of share", None, "Shareholding", "E60 Number", ()),
    ("in time", "is time of", "Legal Object Relationship", "E52 Time-Span", ()),
    ("formerly or currently possesses", "is formerly or currently possessed by", "E39 Actor", "Legal Document with Temporal Validity", ()),
    ("de-flagging of", "de-flagged in", "De-flagging", "Ship", ()),
    ("finally arriving at", "is arrival place of", "Voyage", "E53 Place", ()),
    ("starting from", "is starting place of", "Voyage", "E53 Place", ()),
    ("destination", "is destination of", "Voyage", "E53 Place", ()),
    ("loaded", "was loaded by", "Loading", "E18 Physical Thing", ()),
    ("unloaded", "was unloaded by", "Unloading", "E18 Physical Thing", ()),
    ("at place", "is place of arrival", "Arrival", "E53 Place", ()),
    ("from place", "is place of leaving", "Leaving", "E53 Place", ()),
    ("by place", "is place of passing by", "Passing", "E53 Place", ()),
    ("through place", "is place of passing through", "Passing", "E53 Place", ()),
    ("for service", "service of", "Money for Service", "Service", ()),
    ("for employment", "employment from", "Money for Labour", "Employment", ("for service",)),
    ("had money value", "was price of", "Money for Service", "E97 Monetary Amount", ()),
    ("for employment period", "is employment period of", "Money for Labour", "E52 Time-Span", ()),
    ("has been agreed in", "is agreement for", "Money for Labour", "Labour Contract", ()),
    ("for thing", "thing of", "Money for Things", "E18 Physical Thing", ()),
    ("has first name", None, "E21 Person", "E62 String", ()),
    ("has last name", None, "E21 Person", "E62 String", ()),
    ("has current age", None, "E21 Person", "E60 Number", ()),
    ("with ID", "ID of", "Civil Registration", "E42 Identifier", ()),
    ("registers person", "person is registered by", "Civil Registration", "E21 Person", ()),
    ("is given to", "was punished by", "Punishment", "E39 Actor", ()),
    ("related to", None, "E21 Person", "E21 Person", ()),
    ("with number of students", None, "Teaching Unit", "E60 Number", ()),
)

SYMMETRIC_PROPERTIES = frozenset({"related to"})

# classes whose instances are literal values; properties ranging over
# them take Literal objects in the graph
LITERAL_RANGE_CLASSES = frozenset({"E60 Number", "E62 String"})

# ----------------------------------------------------------------------
# reified properties: (base property label, attribute label, attribute range)

PROPERTY_ATTRIBUTES: tuple[tuple[str, str, str], ...] = (
    ("works at", "in the role of", "Profession"),
    ("related to", "with relation type", "E55 Type"),
    ("navigated by captain", "in the rank of", "Profession"),
    ("employment provided by", "in the position of", "Profession"),
)

# ----------------------------------------------------------------------
# application vocabulary for provenance and the record/source facets

APP_CLASSES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("Record", ("E73 Information Object",)),
    ("Source", ("E73 Information Object",)),
)

APP_PROPERTIES: tuple[tuple[str, str | None, str, str, tuple[str, ...]], ...] = (
    ("appears in", "mentions", "E1 CRM Entity", "Record", ()),
    ("from source", "has record", "Record", "Source", ()),
)
