steps = {
    "intro": "\nThis example walks through one divisor from its class to its extremality certificate, "
             "in the following steps: \n",
    "step1": "1. The class of D_a has been built for the signature {signature}:\n   {divisor}",
    "step2": "2. D_a splits into {count} irreducible component(s):",
    "step3": "3. The X curve pairs with D_a to {pairing}; the certificate verdict is '{verdict}'.",
    "step4": "4. The signature reduces to {end} in {f_steps} f-step(s).",
    "step5": "5. The canonical class on the quotient by relabelings fails the constraints of: {failing}",
    "outro": "\nAll done!",
}
