#!/usr/bin/env python3
"""Regenerate src/ddxkit/data/term_map.json.

Two tables feed the map: standalone anatomical terms with curated related
terms, and sided bases that expand "(R)"/"(L)" markers into "right ..."/
"left ..." phrases ("{s}" is the side word). Very generic sided terms keep
only the expanded form as their single related term; fully generic unsided
terms (mouth, nose, ...) get no entry at all.

The output must satisfy ddxkit.augment.terms.validate_term_map, in particular
no related term may contain any canonical term as a whole word.
"""

import json
import sys
from pathlib import Path

SINGLES = {
    "forehead": ["brow area", "front of the head"],
    "occiput": ["back of the head", "occipital region"],
    "scalp": ["top of the head", "crown of the head"],
    "epigastric": ["epigastrium", "antecardium", "pit of the stomach", "upper abdomen"],
    "hypogastrium": ["lower central abdomen", "suprapubic region", "area below the navel"],
    "umbilicus": ["navel", "belly button", "umbilical region"],
    "pubis": ["pubic region", "area just above the genitals"],
    "sacrum": ["sacral region", "base of the lower back"],
    "coccyx": ["tailbone", "coccygeal region"],
    "perineum": ["perineal region", "area between the genitals and the bottom"],
    "anus": ["anal region", "anal opening"],
    "rectum": ["rectal area", "back passage"],
    "penis": ["penile region", "male genital organ"],
    "scrotum": ["scrotal sac", "scrotal region"],
    "vulva": ["vulvar region", "external female genital area"],
    "nape": ["back of the neck", "nuchal region"],
    "pharynx": ["pharyngeal area", "back of the throat"],
    "larynx": ["voice box", "laryngeal region"],
    "trachea": ["windpipe", "tracheal region"],
    "sternum": ["breastbone", "sternal region", "middle of the chest"],
    "thyroid cartilage": ["adam's apple", "front of the voice box"],
    "palate": ["roof of the mouth"],
    "uvula": ["small flap at the back of the mouth"],
    "lumbar spine": ["lower back", "small of the back"],
    "thoracic spine": ["middle of the back", "mid-back"],
    "cervical spine": ["back of the neck bones", "neck portion of the backbone"],
    "xiphoid process": ["tip of the breastbone", "lower end of the breastbone"],
    "diaphragm area": ["area under the ribs", "base of the chest"],
    "glabella": ["area between the eyebrows"],
    "bridge of the nose": ["nasal bridge", "top of the nose"],
    "tip of the nose": ["nasal tip", "end of the nose"],
    "bladder area": ["area above the pubic bone", "lower belly over the bladder"],
    "jugular notch": ["pit at the base of the front of the neck", "suprasternal notch"],
}

# base -> templates with "{s}" for the side word; None keeps only the expansion
SIDED = {
    "hypochondrium": [
        "{s} hypochondriac region",
        "{s} side of upper abdominal quadrant",
        "{s} side of the upper abdomen",
        "{s} hypochondrium",
    ],
    "iliac fossa": [
        "{s} iliac region",
        "{s} side of lower abdominal quadrant",
        "{s} side of the lower abdomen",
        "{s} iliac fossa",
    ],
    "flank": ["{s} flank", "{s} side of the waist", "{s} lateral abdominal wall"],
    "loin": ["{s} loin", "{s} side of the lower back"],
    "temple": ["{s} temple", "{s} temporal region", "{s} side of the head above the eye"],
    "cheek": ["{s} cheek", "{s} side of the face"],
    "cheekbone": ["{s} cheekbone", "{s} zygomatic area"],
    "ear": ["{s} ear", "{s} auricular region"],
    "eye": ["{s} eye", "{s} ocular region"],
    "eyelid": ["{s} eyelid", "{s} palpebral area"],
    "eyebrow": ["{s} eyebrow", "{s} brow ridge"],
    "nostril": ["{s} nostril", "{s} side of the nose"],
    "tonsil": ["{s} tonsil", "{s} tonsillar area"],
    "under the jaw": ["under the {s} jaw", "{s} submandibular area"],
    "side of the neck": ["{s} side of the neck", "{s} lateral neck"],
    "collarbone": ["{s} collarbone", "{s} clavicular region"],
    "shoulder": ["{s} shoulder", "{s} shoulder joint"],
    "shoulder blade": ["{s} shoulder blade", "{s} scapular region"],
    "armpit": ["{s} armpit", "{s} axillary region"],
    "upper arm": ["{s} upper arm"],
    "biceps": ["{s} biceps", "front of the {s} upper arm muscle"],
    "triceps": ["{s} triceps", "back of the {s} upper arm muscle"],
    "elbow": ["{s} elbow"],
    "forearm": ["{s} forearm"],
    "wrist": ["{s} wrist"],
    "hand": ["{s} hand"],
    "palm": ["{s} palm", "palm of the {s} hand"],
    "back of the hand": ["back of the {s} hand", "{s} dorsal hand area"],
    "thumb": ["{s} thumb"],
    "index finger": ["{s} index finger", "{s} pointer finger"],
    "middle finger": ["{s} middle finger"],
    "ring finger": ["{s} ring finger"],
    "little finger": ["{s} little finger", "{s} pinky finger"],
    "breast": ["{s} breast", "{s} mammary region"],
    "pectoral region": ["{s} pectoral area", "{s} side of the chest wall"],
    "costal margin": ["{s} costal edge", "lower border of the {s} rib cage"],
    "groin": ["{s} groin", "{s} inguinal region"],
    "buttock": ["{s} buttock", "{s} gluteal region"],
    "hip": ["{s} hip", "{s} hip joint"],
    "sacroiliac joint": ["{s} sacroiliac area", "{s} side of the pelvis at the back"],
    "thigh": ["{s} thigh"],
    "hamstring": ["{s} hamstring", "back of the {s} thigh"],
    "knee": ["{s} knee"],
    "kneecap": ["{s} kneecap", "{s} patellar region"],
    "popliteal fossa": ["{s} popliteal area", "back of the {s} knee"],
    "shin": ["{s} shin", "front of the {s} lower leg"],
    "calf": ["{s} calf", "back of the {s} lower leg"],
    "ankle": ["{s} ankle"],
    "achilles region": ["{s} achilles area", "above the {s} heel"],
    "heel": ["{s} heel"],
    "sole": ["{s} sole", "bottom of the {s} foot"],
    "instep": ["{s} instep", "top of the {s} foot"],
    "foot": ["{s} foot"],
    "big toe": ["{s} big toe", "{s} great toe"],
    "little toe": ["{s} little toe", "smallest toe of the {s} foot"],
    "testicle": ["{s} testicle", "{s} testis"],
    "trapezius area": ["{s} trapezius region", "top of the {s} shoulder area"],
    "deltoid area": ["{s} deltoid region", "outer {s} shoulder muscle"],
    "jaw angle": ["{s} jaw angle", "angle of the {s} jaw"],
    "rib area": ["{s} rib area", "{s} side of the rib cage"],
    "hip crest": ["{s} hip crest", "{s} iliac crest area"],
    "ankle bone": ["{s} ankle bone", "{s} malleolus area"],
    "wrist crease": ["{s} wrist crease", "inner {s} wrist area"],
    "forefoot": ["{s} forefoot", "front part of the {s} foot"],
}


def build() -> dict[str, list[str]]:
    entries: dict[str, list[str]] = {}
    for term, related in sorted(SINGLES.items()):
        entries[term] = related
    for base, templates in sorted(SIDED.items()):
        for marker, side in (("(r)", "right"), ("(l)", "left")):
            entries[f"{base}{marker}"] = [t.format(s=side) for t in templates]
    return entries


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    sys.path.insert(0, str(root / "src"))
    from ddxkit.augment.terms import validate_term_map

    entries = build()
    validate_term_map(entries)
    out = root / "src" / "ddxkit" / "data" / "term_map.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"{len(entries)} canonical terms -> {out}")


if __name__ == "__main__":
    main()
