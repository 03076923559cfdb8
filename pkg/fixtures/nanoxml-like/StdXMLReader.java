package net.n3.nanoxml;

import java.io.IOException;
import java.io.PushbackReader;
import java.util.Stack;

public class StdXMLReader {

    private PushbackReader currentReader;
    private PushbackReader pbReader;
    private Stack readers;

    public char read() throws IOException {
        int ch = currentReader.read();
        if (this.pbReader != null) {
            if (readers.empty()) {
                currentReader.close();
                currentReader = readers.pop();
                ch = currentReader.read();
            }
        }
        return (char) ch;
    }
}
