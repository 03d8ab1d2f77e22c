import roman_urdu as ru


def sentence_of(text):
    """First sentence of ``text``."""
    return ru.split_sentences(ru.tokenize(text))[0]


def word_position(sentence, ordinal):
    """Token index of the ordinal-th Word token."""
    return sentence.words()[ordinal][0]
