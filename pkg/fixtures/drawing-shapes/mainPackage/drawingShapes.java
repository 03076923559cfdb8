package mainPackage;

import javax.swing.JFrame;

public class drawingShapes extends JFrame {

    public drawingShapes() {
        setTitle("Drawing shapes");
    }

    public static void main(String args) {
        drawingShapes application = new drawingShapes();
        application.setDefaultCloseOperation(JFrame.EXIT_ON_CLOSE);
    }
}
